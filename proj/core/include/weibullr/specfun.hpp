#pragma once

// Special functions shared by the distribution code: log-gamma, the upper
// incomplete gamma function and standard normal tail quantities.
//
// Everything here is pure and reentrant. Arguments outside the documented
// domain raise weibullr::DomainError.

namespace weibullr::specfun {

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr long double kEulerGamma = 0.57721566490153286061L;

/// ln Gamma(a) for a > 0.
double log_gamma(double a);

/// Gamma(a, x) = integral_x^inf t^(a-1) e^-t dt, for a > 0 and x >= 0.
///
/// Uses the power series of the lower function when x < a + 1 and the
/// Legendre continued fraction otherwise. Returns 0 once the value underflows
/// and +inf once it overflows; use log_upper_incomplete_gamma for a finite
/// answer in those regimes.
double upper_incomplete_gamma(double a, double x);

/// ln Gamma(a, x). Finite for every valid finite (a, x).
double log_upper_incomplete_gamma(double a, double x);

/// Regularized Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_upper_gamma(double a, double x);

/// Phi(z), the standard normal cdf.
double std_normal_cdf(double z);

/// ln(1 - Phi(z)) without forming 1 - Phi(z). Accepts z = +-inf.
double std_normal_log_survival(double z);

/// ln phi(z), the standard normal log density.
double std_normal_log_pdf(double z);

/// The z with ln(1 - Phi(z)) = log_s, for log_s in (-inf, 0). The endpoints
/// map to +inf and -inf.
double std_normal_quantile_from_log_survival(double log_s);

}  // namespace weibullr::specfun
