#pragma once

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weibullr {

/// Open support interval (lower, upper); either end may be infinite.
struct Support {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return x > lower && x < upper; }
  bool contains_closed(double x) const noexcept { return x >= lower && x <= upper; }
  bool bounded_below() const noexcept { return lower > -std::numeric_limits<double>::infinity(); }
};

enum class Family { pareto, lomax, cauchy, normal, weibull, exponential };

std::string_view family_name(Family f) noexcept;

/// Parses the CLI spelling (`pareto`, `lomax`, ...). Throws ParameterError.
Family family_from_name(std::string_view name);

/// Parameter names in CLI order, e.g. {"k", "theta"} for Lomax.
std::span<const std::string_view> family_parameter_names(Family f) noexcept;

/// The baseline distribution R that the Weibull outer law is composed with.
///
/// Implementations are immutable. Density-like members (pdf, cdf, survival)
/// accept any real x and return the natural values outside the support;
/// members that only make sense on the support (log_survival, hazard,
/// log_hazard) throw DomainError outside the closed support and return the
/// one-sided limit at a finite endpoint.
class Baseline {
 public:
  virtual ~Baseline() = default;

  virtual Family family() const noexcept = 0;
  virtual std::vector<double> parameters() const = 0;
  virtual Support support() const noexcept = 0;

  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double survival(double x) const = 0;

  /// ln(1 - F_R(x)), computed in closed form for every family. Its negation is
  /// the cumulative hazard H_R(x).
  virtual double log_survival(double x) const = 0;

  /// ln F_R(x). The default takes the log of cdf(); families whose lower tail
  /// underflows override it.
  virtual double log_cdf(double x) const;

  virtual double hazard(double x) const;
  virtual double log_hazard(double x) const = 0;

  /// d/dx ln f_R(x). The default is a central finite difference.
  virtual double dlog_pdf(double x) const;

  /// The x with H_R(x) = h, for h in [0, inf]. This is Q_R(1 - e^-h) without
  /// ever forming 1 - e^-h, so deep upper tails stay exact.
  virtual double inverse_cumulative_hazard(double h) const = 0;

  /// Q_R(p); p = 0 and p = 1 return the support endpoints.
  double quantile(double p) const;

  double cumulative_hazard(double x) const { return -log_survival(x); }

  bool same_as(const Baseline& other) const;

 protected:
  void require_in_support(double x, const char* what) const;
};

using BaselinePtr = std::shared_ptr<const Baseline>;

/// Builds a baseline of the given family from its parameters in CLI order.
/// Throws ParameterError naming the offending field.
BaselinePtr make_baseline(Family family, std::span<const double> params);

BaselinePtr make_pareto(double k, double theta);
BaselinePtr make_lomax(double k, double theta);
BaselinePtr make_cauchy(double delta);
BaselinePtr make_normal(double mu, double sigma);
BaselinePtr make_weibull(double k, double lambda);
BaselinePtr make_exponential(double lambda);

/// Convenience: log(1 - F_R(x)) via the family's closed form.
inline double baseline_log_survival(const Baseline& b, double x) { return b.log_survival(x); }

}  // namespace weibullr
