#include "weibullr/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "weibullr/errors.hpp"
#include "weibullr/simplex.hpp"

namespace weibullr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DataSummary {
  double min, q1, median, q3;
};

double sorted_quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= sorted.size()) return sorted.back();
  return sorted[i] + (pos - static_cast<double>(i)) * (sorted[i + 1] - sorted[i]);
}

DataSummary summarise(std::span<const double> data) {
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  return {sorted.front(), sorted_quantile(sorted, 0.25), sorted_quantile(sorted, 0.5),
          sorted_quantile(sorted, 0.75)};
}

double positive_or(double v, double fallback) { return v > 0.0 && std::isfinite(v) ? v : fallback; }

// Baseline starting values from the sample median and quartiles.
std::vector<double> heuristic_init(Family family, const DataSummary& s) {
  const double iqr = positive_or(s.q3 - s.q1, 1.0);
  switch (family) {
    case Family::pareto: {
      const double theta = s.min * (1.0 - 1e-6);
      return {positive_or(std::numbers::ln2 / std::log(s.median / theta), 1.0), theta};
    }
    case Family::lomax: return {1.0, positive_or(s.median, 1.0)};
    case Family::cauchy: return {iqr / 2.0};
    case Family::normal: return {s.median, iqr / 1.349};
    case Family::weibull: return {1.0, positive_or(s.median / std::numbers::ln2, 1.0)};
    case Family::exponential: return {positive_or(std::numbers::ln2 / s.median, 1.0)};
  }
  return {};
}

std::vector<std::string> all_names(Family family) {
  std::vector<std::string> names = {"c", "gamma"};
  for (auto n : family_parameter_names(family)) names.emplace_back(n);
  return names;
}

bool is_positive_param(Family family, std::size_t index) {
  return !(family == Family::normal && index == 2);  // mu is unconstrained
}

}  // namespace

std::vector<std::string> default_free_parameters(Family family) {
  switch (family) {
    case Family::pareto: return {"c", "k"};
    case Family::lomax: return {"c", "k", "theta"};
    case Family::cauchy: return {"c", "gamma", "delta"};
    case Family::normal: return {"c", "gamma", "mu", "sigma"};
    case Family::weibull: return {"c", "lambda"};
    case Family::exponential: return {"c", "lambda"};
  }
  return {};
}

void FitSpec::validate() const {
  if (!(c_init > 0.0) || !std::isfinite(c_init)) throw ParameterError("c", "initial value must be positive");
  if (!(gamma_init > 0.0) || !std::isfinite(gamma_init)) {
    throw ParameterError("gamma", "initial value must be positive");
  }
  const auto names = family_parameter_names(family);
  if (baseline_init.size() > names.size()) {
    throw ParameterError("params", "too many baseline initial values");
  }
  for (std::size_t i = 0; i < baseline_init.size(); ++i) {
    if (!baseline_init[i]) continue;
    const double v = *baseline_init[i];
    if (!std::isfinite(v) || (is_positive_param(family, i + 2) && !(v > 0.0))) {
      throw ParameterError(std::string(names[i]), "initial value violates its constraint");
    }
  }
  const auto known = all_names(family);
  for (const auto& f : free) {
    if (std::find(known.begin(), known.end(), f) == known.end()) {
      throw ParameterError("free", "unknown parameter '" + f + "' for " +
                                       std::string(family_name(family)));
    }
  }
  if (max_iters < 1) throw ParameterError("max_iters", "must be >= 1");
  if (!(tol > 0.0)) throw ParameterError("tol", "must be positive");
  if (starts < 1) throw ParameterError("starts", "must be >= 1");
}

WeibullR FitResult::model() const {
  return WeibullR(params, make_baseline(family, baseline_params));
}

double log_likelihood(const WeibullR& d, std::span<const double> data) {
  if (data.empty()) throw DomainError("log_likelihood: data is empty");
  long double sum = 0.0L;
  for (double x : data) {
    const double lp = d.log_pdf(x);
    if (lp == -kInf) return -kInf;
    sum += lp;
  }
  return static_cast<double>(sum);
}

FitResult fit_mle(std::span<const double> data, const FitSpec& spec, RandomSource& rng) {
  spec.validate();
  if (data.empty()) throw DomainError("fit_mle: data is empty");

  const auto names = all_names(spec.family);
  std::vector<std::string> free = spec.free.empty() ? default_free_parameters(spec.family) : spec.free;
  if (spec.family == Family::pareto) std::erase(free, std::string("theta"));
  if (free.empty()) throw ParameterError("free", "no parameter left to fit");
  if (data.size() < free.size() + 1) {
    throw DomainError("fit_mle: need at least " + std::to_string(free.size() + 1) +
                      " observations for " + std::to_string(free.size()) + " free parameters");
  }

  const DataSummary summary = summarise(data);
  std::vector<double> full = {spec.c_init, spec.gamma_init};
  const auto guess = heuristic_init(spec.family, summary);
  for (std::size_t i = 0; i < guess.size(); ++i) {
    const bool given = i < spec.baseline_init.size() && spec.baseline_init[i];
    full.push_back(given ? *spec.baseline_init[i] : guess[i]);
  }
  if (spec.family == Family::pareto) full[3] = summary.min * (1.0 - 1e-6);

  std::vector<std::size_t> index;
  for (const auto& f : free) {
    index.push_back(static_cast<std::size_t>(std::find(names.begin(), names.end(), f) - names.begin()));
  }
  auto log_coordinate = [&](std::size_t i) {
    return spec.log_transform && is_positive_param(spec.family, i);
  };

  auto unpack = [&](std::span<const double> t) {
    std::vector<double> p = full;
    for (std::size_t j = 0; j < index.size(); ++j) {
      p[index[j]] = log_coordinate(index[j]) ? std::exp(t[j]) : t[j];
    }
    return p;
  };
  auto objective = [&](std::span<const double> t) {
    const auto p = unpack(t);
    try {
      const WeibullR model({p[0], p[1]}, make_baseline(spec.family, std::span(p).subspan(2)));
      const double ll = log_likelihood(model, data);
      return std::isfinite(ll) ? -ll : kInf;
    } catch (const ParameterError&) {
      return kInf;
    }
  };

  std::vector<double> origin;
  std::vector<double> jitter_scale;
  const double spread = positive_or(summary.q3 - summary.q1, 1.0);
  for (std::size_t i : index) {
    origin.push_back(log_coordinate(i) ? std::log(full[i]) : full[i]);
    if (log_coordinate(i)) {
      jitter_scale.push_back(0.5);
    } else {
      jitter_scale.push_back(is_positive_param(spec.family, i) ? 0.5 * full[i] : 0.5 * spread);
    }
  }

  SimplexOptions options{spec.max_iters, spec.tol, 0.5};
  FitResult result;
  result.family = spec.family;
  double best_value = kInf;
  std::vector<double> best_point;

  for (int s = 0; s < spec.starts; ++s) {
    std::vector<double> start = origin;
    if (s > 0) {
      for (std::size_t j = 0; j < start.size(); ++j) start[j] += jitter_scale[j] * rng.normal();
    }
    auto run = nelder_mead(objective, start, options);
    // A second pass from the optimum guards against a collapsed simplex.
    options.initial_step = 0.1;
    auto polish = nelder_mead(objective, run.x, options);
    options.initial_step = 0.5;
    const int iterations = run.iterations + polish.iterations;
    if (polish.value > run.value) polish = run;

    if (polish.value < best_value) {
      best_value = polish.value;
      best_point = polish.x;
      result.converged = polish.converged;
      result.iterations = iterations;
      result.best_start = s;
    }
    result.best_by_start.push_back(-best_value);
  }

  if (!std::isfinite(best_value)) {
    throw FitError("fit_mle: no start produced a finite log-likelihood");
  }
  const auto p = unpack(best_point);
  result.params = {p[0], p[1]};
  result.baseline_params.assign(p.begin() + 2, p.end());
  result.log_likelihood = -best_value;
  return result;
}

}  // namespace weibullr
