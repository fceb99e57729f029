#include "weibullr/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "weibullr/errors.hpp"

namespace weibullr::specfun {
namespace {

using real = long double;

constexpr int kMaxIterations = 100000;
constexpr real kEps = std::numeric_limits<real>::epsilon();
constexpr real kTiny = std::numeric_limits<real>::min() / kEps;

real lgamma_ld(real a) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgammal_r(a, &sign);  // reentrant: no write to signgam
#else
  return std::lgamma(a);
#endif
}

void require_gamma_domain(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("incomplete gamma: shape must be positive and finite, got " +
                      std::to_string(a));
  }
  if (!(x >= 0.0) || std::isnan(x)) {
    throw DomainError("incomplete gamma: argument must be >= 0, got " + std::to_string(x));
  }
}

// ln of integral_x^inf via Legendre's continued fraction (modified Lentz).
real log_gamma_cf(real a, real x) {
  real b = x + 1.0L - a;
  real c = 1.0L / kTiny;
  real d = 1.0L / b;
  real h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const real an = -i * (i - a);
    b += 2.0L;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0L / d;
    const real step = d * c;
    h *= step;
    if (std::fabs(step - 1.0L) <= kEps) break;
  }
  return -x + a * std::log(x) + std::log(h);
}

// Regularized lower P(a, x) by its power series; requires x < a + 1.
real lower_regularized_series(real a, real x) {
  real ap = a;
  real term = 1.0L / a;
  real sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0L;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) <= std::fabs(sum) * kEps) break;
  }
  return std::exp(-x + a * std::log(x) - lgamma_ld(a) + std::log(sum));
}

// Gamma(a, x) for a < 1, x < a + 1:
//   [(Gamma(a+1) - 1) - (x^a - 1)] / a - x^a * sum_{n>=1} (-x)^n / (n! (a+n))
// keeps the O(a) cancellation between Gamma(a) and gamma(a, x) out of the sum.
real small_shape_upper(real a, real x) {
  const real gamma1pm1 = std::expm1(lgamma_ld(1.0L + a));
  const real xa_m1 = std::expm1(a * std::log(x));
  real term = 1.0L;
  real sum = 0.0L;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= -x / n;
    const real add = term / (a + n);
    sum += add;
    if (std::fabs(add) <= std::fabs(sum) * kEps) break;
  }
  return (gamma1pm1 - xa_m1) / a - (xa_m1 + 1.0L) * sum;
}

real log_upper_gamma_ld(real a, real x) {
  if (x == 0.0L) return lgamma_ld(a);
  if (std::isinf(x)) return -std::numeric_limits<real>::infinity();
  if (x >= a + 1.0L) return log_gamma_cf(a, x);
  if (a < 1.0L) return std::log(small_shape_upper(a, x));
  return lgamma_ld(a) + std::log1p(-lower_regularized_series(a, x));
}

// Mills ratio (1 - Phi(z)) / phi(z) by backward evaluation of its continued
// fraction; accurate to full precision for z >= 8.
real mills_ratio(real z) {
  real t = z;
  for (int k = 120; k >= 1; --k) t = z + k / t;
  return 1.0L / t;
}

constexpr real kLogSqrt2Pi = 0.91893853320467274178032973640562L;

// Rational approximation to the normal quantile (relative error ~1e-9),
// refined afterwards by Newton steps in log space.
constexpr std::array<double, 6> kA = {-3.969683028665376e+01, 2.209460984245205e+02,
                                      -2.759285104469687e+02, 1.383577518672690e+02,
                                      -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> kB = {-5.447609879822406e+01, 1.615858368580409e+02,
                                      -1.556989798598866e+02, 6.680131188771972e+01,
                                      -1.328068155288572e+01};
constexpr std::array<double, 6> kC = {-7.784894002430293e-03, -3.223964580411365e-01,
                                      -2.400758277161838e+00, -2.549732539343734e+00,
                                      4.374664141464968e+00,  2.938163982698783e+00};
constexpr std::array<double, 4> kD = {7.784695709041462e-03, 3.224671290700398e-01,
                                      2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kTailSplit = 0.02425;

double tail_rational(double q) {
  return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
         ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
}

double central_rational(double q) {
  const double r = q * q;
  return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
         (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

}  // namespace

double log_gamma(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " +
                      std::to_string(a));
  }
  return static_cast<double>(lgamma_ld(a));
}

double upper_incomplete_gamma(double a, double x) {
  require_gamma_domain(a, x);
  return static_cast<double>(std::exp(log_upper_gamma_ld(a, x)));
}

double log_upper_incomplete_gamma(double a, double x) {
  require_gamma_domain(a, x);
  return static_cast<double>(log_upper_gamma_ld(a, x));
}

double regularized_upper_gamma(double a, double x) {
  require_gamma_domain(a, x);
  const real q = std::exp(log_upper_gamma_ld(a, x) - lgamma_ld(a));
  return static_cast<double>(std::fmin(q, 1.0L));
}

double std_normal_cdf(double z) {
  if (!std::isfinite(z)) throw DomainError("std_normal_cdf: argument must be finite");
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double std_normal_log_pdf(double z) {
  if (std::isnan(z)) throw DomainError("std_normal_log_pdf: NaN argument");
  return static_cast<double>(-0.5L * static_cast<real>(z) * z - kLogSqrt2Pi);
}

double std_normal_log_survival(double z) {
  if (std::isnan(z)) throw DomainError("std_normal_log_survival: NaN argument");
  if (z == std::numeric_limits<double>::infinity()) return -std::numeric_limits<double>::infinity();
  if (z > 8.0) {
    const real zl = z;
    return static_cast<double>(-0.5L * zl * zl - kLogSqrt2Pi + std::log(mills_ratio(zl)));
  }
  if (z > -1.0) return std::log(0.5 * std::erfc(z / std::numbers::sqrt2));
  return std::log1p(-0.5 * std::erfc(-z / std::numbers::sqrt2));
}

double std_normal_quantile_from_log_survival(double log_s) {
  if (std::isnan(log_s) || log_s > 0.0) {
    throw DomainError("normal quantile: log-survival must be <= 0");
  }
  if (log_s == 0.0) return -std::numeric_limits<double>::infinity();
  if (std::isinf(log_s)) return std::numeric_limits<double>::infinity();

  const double s = std::exp(log_s);
  const double f = -std::expm1(log_s);
  const double log_f = std::log(f);

  double z;
  if (f < kTailSplit) {
    z = tail_rational(std::sqrt(-2.0 * log_f));
  } else if (s < kTailSplit) {
    z = -tail_rational(std::sqrt(-2.0 * log_s));
  } else {
    z = central_rational(f < 0.5 ? f - 0.5 : 0.5 - s);
  }

  // Newton on the log of whichever tail is smaller.
  const bool upper = s < 0.5;
  for (int i = 0; i < 6; ++i) {
    double step;
    if (upper) {
      const double ls = std_normal_log_survival(z);
      step = (ls - log_s) / -std::exp(std_normal_log_pdf(z) - ls);
    } else {
      const double lf = std_normal_log_survival(-z);
      step = (lf - log_f) / std::exp(std_normal_log_pdf(z) - lf);
    }
    z -= step;
    if (std::fabs(step) <= 1e-15 * std::fmax(1.0, std::fabs(z))) break;
  }
  return z;
}

}  // namespace weibullr::specfun
