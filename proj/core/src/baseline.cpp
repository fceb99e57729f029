#include "weibullr/baseline.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "weibullr/errors.hpp"
#include "weibullr/specfun.hpp"

namespace weibullr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

constexpr std::array<std::string_view, 2> kShapeScale = {"k", "theta"};
constexpr std::array<std::string_view, 1> kCauchyNames = {"delta"};
constexpr std::array<std::string_view, 2> kNormalNames = {"mu", "sigma"};
constexpr std::array<std::string_view, 2> kWeibullNames = {"k", "lambda"};
constexpr std::array<std::string_view, 1> kExponentialNames = {"lambda"};

void require_positive(std::string_view field, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string(field), "must be positive and finite, got " + std::to_string(v));
  }
}

void require_finite(std::string_view field, double v) {
  if (!std::isfinite(v)) throw ParameterError(std::string(field), "must be finite");
}

void require_cumulative_hazard(double h) {
  if (!(h >= 0.0)) throw DomainError("cumulative hazard target must be >= 0");
}

class Pareto final : public Baseline {
 public:
  Pareto(double k, double theta) : k_(k), theta_(theta) {
    require_positive("k", k);
    require_positive("theta", theta);
  }

  Family family() const noexcept override { return Family::pareto; }
  std::vector<double> parameters() const override { return {k_, theta_}; }
  Support support() const noexcept override { return {theta_, kInf}; }

  double pdf(double x) const override {
    if (!(x >= theta_)) return 0.0;
    return std::exp(log_hazard(x) + log_survival(x));
  }
  double cdf(double x) const override {
    if (!(x > theta_)) return 0.0;
    return -std::expm1(log_survival(x));
  }
  double survival(double x) const override {
    if (!(x > theta_)) return 1.0;
    return std::exp(log_survival(x));
  }
  double log_survival(double x) const override {
    require_in_support(x, "pareto log_survival");
    if (x > 2.0 * theta_) return -k_ * (std::log(x) - std::log(theta_));
    return -k_ * std::log1p((x - theta_) / theta_);
  }
  double log_hazard(double x) const override {
    require_in_support(x, "pareto hazard");
    return std::log(k_ / x);
  }
  double dlog_pdf(double x) const override { return -(k_ + 1.0) / x; }
  double inverse_cumulative_hazard(double h) const override {
    require_cumulative_hazard(h);
    const double t = h / k_;
    if (t < 1.0) return theta_ + theta_ * std::expm1(t);
    if (t > 700.0) return std::exp(t + std::log(theta_));
    return theta_ * std::exp(t);
  }

 private:
  double k_;
  double theta_;
};

class Lomax final : public Baseline {
 public:
  Lomax(double k, double theta) : k_(k), theta_(theta) {
    require_positive("k", k);
    require_positive("theta", theta);
  }

  Family family() const noexcept override { return Family::lomax; }
  std::vector<double> parameters() const override { return {k_, theta_}; }
  Support support() const noexcept override { return {0.0, kInf}; }

  double pdf(double x) const override {
    if (!(x >= 0.0)) return 0.0;
    return (k_ / theta_) * std::exp(-(k_ + 1.0) * log1p_ratio(x));
  }
  double cdf(double x) const override {
    if (!(x > 0.0)) return 0.0;
    return -std::expm1(log_survival(x));
  }
  double survival(double x) const override {
    if (!(x > 0.0)) return 1.0;
    return std::exp(log_survival(x));
  }
  double log_survival(double x) const override {
    require_in_support(x, "lomax log_survival");
    return -k_ * log1p_ratio(x);
  }
  double log_hazard(double x) const override {
    require_in_support(x, "lomax hazard");
    return std::log(k_ / (theta_ + x));
  }
  double dlog_pdf(double x) const override { return -(k_ + 1.0) / (theta_ + x); }
  double inverse_cumulative_hazard(double h) const override {
    require_cumulative_hazard(h);
    const double t = h / k_;
    if (t > 40.0) return std::exp(t + std::log(theta_));
    return theta_ * std::expm1(t);
  }

 private:
  // log(1 + x / theta) without overflowing x / theta.
  double log1p_ratio(double x) const {
    if (x > 1e15 * theta_) return std::log(x) - std::log(theta_) + std::log1p(theta_ / x);
    return std::log1p(x / theta_);
  }

  double k_;
  double theta_;
};

// Location-free Cauchy with scale delta. Both tails are evaluated through
// atan(delta / |x|), which stays relative-accurate as |x| grows.
class Cauchy final : public Baseline {
 public:
  explicit Cauchy(double delta) : delta_(delta) { require_positive("delta", delta); }

  Family family() const noexcept override { return Family::cauchy; }
  std::vector<double> parameters() const override { return {delta_}; }
  Support support() const noexcept override { return {}; }

  double pdf(double x) const override {
    if (std::isinf(x)) return 0.0;
    return std::exp(log_pdf(x));
  }
  double cdf(double x) const override { return lower_tail(x); }
  double survival(double x) const override { return lower_tail(-x); }
  double log_survival(double x) const override {
    require_in_support(x, "cauchy log_survival");
    if (x > 0.0) return std::log(std::atan(delta_ / x) / kPi);
    if (x == 0.0) return -std::numbers::ln2;
    return std::log1p(-std::atan(delta_ / -x) / kPi);
  }
  double log_hazard(double x) const override {
    require_in_support(x, "cauchy hazard");
    return log_pdf(x) - log_survival(x);
  }
  double dlog_pdf(double x) const override {
    const double t = x / delta_;
    return -2.0 * t / (delta_ * (1.0 + t * t));
  }
  double inverse_cumulative_hazard(double h) const override {
    require_cumulative_hazard(h);
    if (h == 0.0) return -kInf;
    if (h > std::numbers::ln2) {
      const double s = std::exp(-h);
      return s > 0.25 ? delta_ * std::tan(kPi * (0.5 - s)) : delta_ / std::tan(kPi * s);
    }
    const double f = -std::expm1(-h);
    return f > 0.25 ? -delta_ * std::tan(kPi * (0.5 - f)) : -delta_ / std::tan(kPi * f);
  }

 private:
  double lower_tail(double x) const {
    if (x < 0.0) return std::atan(delta_ / -x) / kPi;
    if (x == 0.0) return 0.5;
    return 1.0 - std::atan(delta_ / x) / kPi;
  }
  double log_pdf(double x) const {
    const double t = std::fabs(x / delta_);
    const double log_norm = std::log(kPi * delta_);
    if (t > 1e150) return -log_norm - 2.0 * std::log(t) - std::log1p(1.0 / (t * t));
    return -log_norm - std::log1p(t * t);
  }

  double delta_;
};

class Normal final : public Baseline {
 public:
  Normal(double mu, double sigma) : mu_(mu), sigma_(sigma) {
    require_finite("mu", mu);
    require_positive("sigma", sigma);
  }

  Family family() const noexcept override { return Family::normal; }
  std::vector<double> parameters() const override { return {mu_, sigma_}; }
  Support support() const noexcept override { return {}; }

  double pdf(double x) const override {
    if (std::isinf(x)) return 0.0;
    return std::exp(specfun::std_normal_log_pdf(z(x))) / sigma_;
  }
  double cdf(double x) const override {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    return specfun::std_normal_cdf(z(x));
  }
  double survival(double x) const override {
    if (std::isinf(x)) return x > 0 ? 0.0 : 1.0;
    return specfun::std_normal_cdf(-z(x));
  }
  double log_cdf(double x) const override {
    require_in_support(x, "normal log_cdf");
    return specfun::std_normal_log_survival(-z(x));
  }
  double log_survival(double x) const override {
    require_in_support(x, "normal log_survival");
    return specfun::std_normal_log_survival(z(x));
  }
  double log_hazard(double x) const override {
    require_in_support(x, "normal hazard");
    const double zx = z(x);
    return specfun::std_normal_log_pdf(zx) - std::log(sigma_) -
           specfun::std_normal_log_survival(zx);
  }
  double dlog_pdf(double x) const override { return -z(x) / sigma_; }
  double inverse_cumulative_hazard(double h) const override {
    require_cumulative_hazard(h);
    return mu_ + sigma_ * specfun::std_normal_quantile_from_log_survival(-h);
  }

 private:
  double z(double x) const { return (x - mu_) / sigma_; }

  double mu_;
  double sigma_;
};

class Weibull final : public Baseline {
 public:
  Weibull(double k, double lambda) : k_(k), lambda_(lambda) {
    require_positive("k", k);
    require_positive("lambda", lambda);
  }

  Family family() const noexcept override { return Family::weibull; }
  std::vector<double> parameters() const override { return {k_, lambda_}; }
  Support support() const noexcept override { return {0.0, kInf}; }

  double pdf(double x) const override {
    if (!(x >= 0.0) || std::isinf(x)) return 0.0;
    return std::exp(log_hazard(x) + log_survival(x));
  }
  double cdf(double x) const override {
    if (!(x > 0.0)) return 0.0;
    return -std::expm1(log_survival(x));
  }
  double survival(double x) const override {
    if (!(x > 0.0)) return 1.0;
    return std::exp(log_survival(x));
  }
  double log_cdf(double x) const override {
    require_in_support(x, "weibull log_cdf");
    const double t = k_ * std::log(x / lambda_);
    if (t < -23.0) return t - 0.5 * std::exp(t);
    return std::log(-std::expm1(-std::exp(t)));
  }
  double log_survival(double x) const override {
    require_in_support(x, "weibull log_survival");
    return -std::pow(x / lambda_, k_);
  }
  double log_hazard(double x) const override {
    require_in_support(x, "weibull hazard");
    if (x == 0.0) {
      if (k_ == 1.0) return -std::log(lambda_);
      return k_ < 1.0 ? kInf : -kInf;
    }
    return std::log(k_ / lambda_) + (k_ - 1.0) * std::log(x / lambda_);
  }
  double dlog_pdf(double x) const override {
    return (k_ - 1.0) / x - (k_ / lambda_) * std::pow(x / lambda_, k_ - 1.0);
  }
  double inverse_cumulative_hazard(double h) const override {
    require_cumulative_hazard(h);
    return lambda_ * std::pow(h, 1.0 / k_);
  }

 private:
  double k_;
  double lambda_;
};

class Exponential final : public Baseline {
 public:
  explicit Exponential(double lambda) : lambda_(lambda) { require_positive("lambda", lambda); }

  Family family() const noexcept override { return Family::exponential; }
  std::vector<double> parameters() const override { return {lambda_}; }
  Support support() const noexcept override { return {0.0, kInf}; }

  double pdf(double x) const override {
    if (!(x >= 0.0)) return 0.0;
    return lambda_ * std::exp(-lambda_ * x);
  }
  double cdf(double x) const override {
    if (!(x > 0.0)) return 0.0;
    return -std::expm1(-lambda_ * x);
  }
  double survival(double x) const override {
    if (!(x > 0.0)) return 1.0;
    return std::exp(-lambda_ * x);
  }
  double log_cdf(double x) const override {
    require_in_support(x, "exponential log_cdf");
    return std::log(-std::expm1(-lambda_ * x));
  }
  double log_survival(double x) const override {
    require_in_support(x, "exponential log_survival");
    return -lambda_ * x;
  }
  double hazard(double x) const override {
    require_in_support(x, "exponential hazard");
    return lambda_;
  }
  double log_hazard(double x) const override {
    require_in_support(x, "exponential hazard");
    return std::log(lambda_);
  }
  double dlog_pdf(double) const override { return -lambda_; }
  double inverse_cumulative_hazard(double h) const override {
    require_cumulative_hazard(h);
    return h / lambda_;
  }

 private:
  double lambda_;
};

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::pareto: return "pareto";
    case Family::lomax: return "lomax";
    case Family::cauchy: return "cauchy";
    case Family::normal: return "normal";
    case Family::weibull: return "weibull";
    case Family::exponential: return "exponential";
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::pareto, Family::lomax, Family::cauchy, Family::normal, Family::weibull,
                   Family::exponential}) {
    if (family_name(f) == name) return f;
  }
  throw ParameterError("family", "unknown baseline family '" + std::string(name) + "'");
}

std::span<const std::string_view> family_parameter_names(Family f) noexcept {
  switch (f) {
    case Family::pareto:
    case Family::lomax: return kShapeScale;
    case Family::cauchy: return kCauchyNames;
    case Family::normal: return kNormalNames;
    case Family::weibull: return kWeibullNames;
    case Family::exponential: return kExponentialNames;
  }
  return {};
}

double Baseline::log_cdf(double x) const { return std::log(cdf(x)); }

double Baseline::hazard(double x) const { return std::exp(log_hazard(x)); }

double Baseline::dlog_pdf(double x) const {
  const double step = 1e-5 * std::fmax(1.0, std::fabs(x));
  auto log_pdf = [this](double t) { return log_hazard(t) + log_survival(t); };
  return (log_pdf(x + step) - log_pdf(x - step)) / (2.0 * step);
}

double Baseline::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("quantile: probability must lie in [0, 1], got " + std::to_string(p));
  }
  if (p == 0.0) return support().lower;
  if (p == 1.0) return support().upper;
  return inverse_cumulative_hazard(-std::log1p(-p));
}

bool Baseline::same_as(const Baseline& other) const {
  return family() == other.family() && parameters() == other.parameters();
}

void Baseline::require_in_support(double x, const char* what) const {
  if (std::isnan(x) || !support().contains_closed(x)) {
    throw DomainError(std::string(what) + ": x = " + std::to_string(x) + " is outside the support");
  }
}

BaselinePtr make_pareto(double k, double theta) { return std::make_shared<Pareto>(k, theta); }
BaselinePtr make_lomax(double k, double theta) { return std::make_shared<Lomax>(k, theta); }
BaselinePtr make_cauchy(double delta) { return std::make_shared<Cauchy>(delta); }
BaselinePtr make_normal(double mu, double sigma) { return std::make_shared<Normal>(mu, sigma); }
BaselinePtr make_weibull(double k, double lambda) { return std::make_shared<Weibull>(k, lambda); }
BaselinePtr make_exponential(double lambda) { return std::make_shared<Exponential>(lambda); }

BaselinePtr make_baseline(Family family, std::span<const double> params) {
  const auto names = family_parameter_names(family);
  if (params.size() != names.size()) {
    throw ParameterError("params", std::string(family_name(family)) + " expects " +
                                       std::to_string(names.size()) + " parameter(s), got " +
                                       std::to_string(params.size()));
  }
  switch (family) {
    case Family::pareto: return make_pareto(params[0], params[1]);
    case Family::lomax: return make_lomax(params[0], params[1]);
    case Family::cauchy: return make_cauchy(params[0]);
    case Family::normal: return make_normal(params[0], params[1]);
    case Family::weibull: return make_weibull(params[0], params[1]);
    case Family::exponential: return make_exponential(params[0]);
  }
  throw ParameterError("family", "unknown baseline family");
}

}  // namespace weibullr
