#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weibullr/baseline.hpp"
#include "weibullr/random.hpp"

namespace weibullr {

/// Outer Weibull shape c and scale gamma.
struct WeibullRParams {
  double c = 1.0;
  double gamma = 1.0;

  /// Throws ParameterError naming "c" or "gamma".
  void validate() const;
};

struct TailAsymptote {
  double pdf;
  double hazard;
};

/// The Weibull-R law: a Weibull(c, gamma) variable evaluated at the baseline
/// cumulative hazard, so that
///
///   F_X(x) = 1 - exp(-[H_R(x) / gamma]^c),   H_R(x) = -log(1 - F_R(x)).
///
/// Every evaluation goes through Baseline::log_survival; 1 - F_R is never
/// formed. Instances are immutable and can be shared between threads.
class WeibullR {
 public:
  WeibullR(WeibullRParams params, BaselinePtr baseline);

  const WeibullRParams& params() const noexcept { return params_; }
  double c() const noexcept { return params_.c; }
  double gamma() const noexcept { return params_.gamma; }
  const Baseline& baseline() const noexcept { return *baseline_; }
  const BaselinePtr& baseline_ptr() const noexcept { return baseline_; }
  Support support() const noexcept { return baseline_->support(); }

  /// Density; 0 outside the support, the one-sided limit at a finite endpoint.
  double pdf(double x) const;
  /// ln pdf; -inf outside the support.
  double log_pdf(double x) const;
  double cdf(double x) const;
  double survival(double x) const;
  double hazard(double x) const;
  /// [H_R(x) / gamma]^c, which is standard exponential under X.
  double cumulative_hazard(double x) const;
  double quantile(double p) const;

  /// The x whose cumulative hazard equals e, i.e. Q_R(1 - exp(-gamma e^(1/c))).
  double from_cumulative_hazard(double e) const;

  /// n inverse-transform draws.
  std::vector<double> sample(std::size_t n, RandomSource& rng) const;

  /// d/dx ln f_X(x); the mode is a root of this with a + to - sign change.
  double mode_equation(double x) const;

  /// Interior maximum of the density, or nullopt when the density is monotone
  /// over the support.
  std::optional<double> mode() const;

  /// Leading-order behaviour of pdf and hazard as x -> -inf. Only defined for
  /// baselines whose support is unbounded below.
  TailAsymptote tail_asymptote(double x) const;

 private:
  double scaled_cumulative_hazard(double x) const;  // H_R(x) / gamma

  WeibullRParams params_;
  BaselinePtr baseline_;
};

}  // namespace weibullr
