#pragma once

#include "weibullr/weibull_r.hpp"

namespace weibullr {

/// Stress-strength query for X ~ Weibull-R(c1, gamma), Y ~ Weibull-R(c2, gamma)
/// sharing one baseline. Only the shapes matter: gamma and the baseline cancel.
struct ReliabilityQuery {
  double c1 = 1.0;
  double c2 = 1.0;
  int kmax = 400;

  void validate() const;
  double ratio() const noexcept { return c2 / c1; }
};

/// Largest c2/c1 accepted by reliability_series.
inline constexpr double kSeriesRatioLimit = 0.9;

/// P(X > Y) = 1 - sum_k (-1)^k / k! Gamma(k c2/c1 + 1).
///
/// The series diverges for c2/c1 >= 1, so ratios above kSeriesRatioLimit are
/// rejected with DomainError. Summation stops once a term drops below 1e-14;
/// reaching kmax first raises ConvergenceError.
double reliability_series(const ReliabilityQuery& q);

/// P(X > Y) = 1 - integral_0^inf exp(-u - u^(c2/c1)) du by adaptive
/// quadrature, truncated where e^-u < 1e-16.
double reliability_quadrature(const ReliabilityQuery& q);

/// Dispatches to the series, its reflection 1 - R(c2, c1), or quadrature.
/// The result lies in [0, 1].
double reliability(const ReliabilityQuery& q);

/// P(X > Y) for two fully specified models. Both must share gamma and the
/// baseline; otherwise ParameterError.
double reliability(const WeibullR& x, const WeibullR& y);

}  // namespace weibullr
