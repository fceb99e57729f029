#include "weibullr/weibull_r.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weibullr/errors.hpp"

namespace weibullr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": x must be finite");
}

}  // namespace

void WeibullRParams::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ParameterError("c", "must be positive and finite");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma", "must be positive and finite");
  }
}

WeibullR::WeibullR(WeibullRParams params, BaselinePtr baseline)
    : params_(params), baseline_(std::move(baseline)) {
  params_.validate();
  if (!baseline_) throw ParameterError("baseline", "must not be null");
}

double WeibullR::scaled_cumulative_hazard(double x) const {
  return -baseline_->log_survival(x) / params_.gamma;
}

double WeibullR::log_pdf(double x) const {
  require_finite(x, "log_pdf");
  if (!support().contains_closed(x)) return -kInf;
  const double c = params_.c;
  const double w = scaled_cumulative_hazard(x);
  const double log_h = baseline_->log_hazard(x);
  const double log_scale = std::log(c) - std::log(params_.gamma);
  double log_w = std::log(w);
  if (w < 1e-200 && x > support().lower) {
    // H_R = -log1p(-F_R) equals F_R to working precision here, and F_R itself
    // may have underflowed.
    log_w = baseline_->log_cdf(x) - std::log(params_.gamma);
    return log_scale + log_h + (c - 1.0) * log_w - std::exp(c * log_w);
  }
  if (w == 0.0) {
    // Finite lower endpoint: H_R^(c-1) decides the limit.
    if (c == 1.0) return log_scale + log_h;
    return c > 1.0 ? -kInf : kInf;
  }
  if (std::isinf(w)) return -kInf;
  return log_scale + log_h + (c - 1.0) * log_w - std::pow(w, c);
}

double WeibullR::pdf(double x) const { return std::exp(log_pdf(x)); }

double WeibullR::cdf(double x) const {
  if (std::isnan(x)) throw DomainError("cdf: NaN argument");
  const Support s = support();
  if (x <= s.lower) return 0.0;
  if (x >= s.upper) return 1.0;
  return -std::expm1(-std::pow(scaled_cumulative_hazard(x), params_.c));
}

double WeibullR::survival(double x) const {
  if (std::isnan(x)) throw DomainError("survival: NaN argument");
  const Support s = support();
  if (x <= s.lower) return 1.0;
  if (x >= s.upper) return 0.0;
  return std::exp(-std::pow(scaled_cumulative_hazard(x), params_.c));
}

double WeibullR::hazard(double x) const {
  if (std::isnan(x) || !support().contains_closed(x)) {
    throw DomainError("hazard: x = " + std::to_string(x) + " is outside the support");
  }
  const double c = params_.c;
  const double w = scaled_cumulative_hazard(x);
  const double log_h = baseline_->log_hazard(x);
  const double log_scale = std::log(c) - std::log(params_.gamma);
  if (w == 0.0) {
    if (c == 1.0) return std::exp(log_scale + log_h);
    return c > 1.0 ? 0.0 : kInf;
  }
  return std::exp(log_scale + log_h + (c - 1.0) * std::log(w));
}

double WeibullR::cumulative_hazard(double x) const {
  if (std::isnan(x) || !support().contains_closed(x)) {
    throw DomainError("cumulative_hazard: x = " + std::to_string(x) + " is outside the support");
  }
  return std::pow(scaled_cumulative_hazard(x), params_.c);
}

double WeibullR::from_cumulative_hazard(double e) const {
  if (!(e >= 0.0)) throw DomainError("cumulative hazard must be >= 0");
  return baseline_->inverse_cumulative_hazard(params_.gamma * std::pow(e, 1.0 / params_.c));
}

double WeibullR::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("quantile: probability must lie in [0, 1], got " + std::to_string(p));
  }
  if (p == 0.0) return support().lower;
  if (p == 1.0) return support().upper;
  return from_cumulative_hazard(-std::log1p(-p));
}

std::vector<double> WeibullR::sample(std::size_t n, RandomSource& rng) const {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(from_cumulative_hazard(rng.exponential()));
  return out;
}

double WeibullR::mode_equation(double x) const {
  if (!support().contains(x)) {
    throw DomainError("mode_equation: x = " + std::to_string(x) + " is not inside the support");
  }
  const double c = params_.c;
  const double big_h = -baseline_->log_survival(x);
  const double h = baseline_->hazard(x);
  const double w = big_h / params_.gamma;
  return baseline_->dlog_pdf(x) + h + (c - 1.0) * h / big_h -
         (c / params_.gamma) * std::pow(w, c - 1.0) * h;
}

std::optional<double> WeibullR::mode() const {
  // Scan in probability space on a logit-uniform grid, which is log-spaced
  // towards both ends of the support whatever the baseline's scale.
  const double scale = std::max(quantile(0.75) - quantile(0.25), std::numeric_limits<double>::min());
  const double t_max = std::log((1.0 - 1e-10) / 1e-10);

  for (int points : {1000, 10000}) {
    std::vector<double> xs;
    std::vector<double> gs;
    xs.reserve(points);
    gs.reserve(points);
    for (int i = 0; i < points; ++i) {
      const double t = -t_max + 2.0 * t_max * i / (points - 1);
      const double x = quantile(1.0 / (1.0 + std::exp(-t)));
      if (!support().contains(x) || (!xs.empty() && x <= xs.back())) continue;
      const double g = mode_equation(x);
      if (!std::isfinite(g)) continue;
      xs.push_back(x);
      gs.push_back(g);
    }

    std::optional<double> best;
    double best_log_pdf = -kInf;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (!(gs[i] > 0.0 && gs[i + 1] <= 0.0)) continue;
      double lo = xs[i];
      double hi = xs[i + 1];
      if (gs[i + 1] < 0.0) {
        for (int it = 0; it < 300; ++it) {
          if (hi - lo <= 1e-10 * std::max(scale, std::fabs(lo))) break;
          const double mid = lo + 0.5 * (hi - lo);
          if (mid <= lo || mid >= hi) break;
          (mode_equation(mid) > 0.0 ? lo : hi) = mid;
        }
      }
      const double root = gs[i + 1] == 0.0 ? hi : lo + 0.5 * (hi - lo);
      const double lp = log_pdf(root);
      if (!best || lp > best_log_pdf) {
        best = root;
        best_log_pdf = lp;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

TailAsymptote WeibullR::tail_asymptote(double x) const {
  if (support().bounded_below()) {
    throw DomainError("tail_asymptote: baseline support is bounded below");
  }
  require_finite(x, "tail_asymptote");
  const double c = params_.c;
  const double f = baseline_->pdf(x);
  const double big_f = baseline_->cdf(x);
  const double log_hazard = std::log(c) - c * std::log(params_.gamma) + std::log(f) +
                            (c - 1.0) * std::log(big_f);
  const double decay = std::pow(big_f / params_.gamma, c);
  return {std::exp(log_hazard - decay), std::exp(log_hazard)};
}

}  // namespace weibullr
