#include "weibullr/expectation.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "weibullr/errors.hpp"
#include "weibullr/quadrature.hpp"
#include "weibullr/specfun.hpp"

namespace weibullr {
namespace {

constexpr double kFirstPanel = 32.0;
constexpr double kLastPanelEnd = 2048.0;

std::string shortest(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct LaguerreEstimate {
  double value;
  bool finite;
};

LaguerreEstimate laguerre_sum(const std::function<double(double)>& h, int n) {
  const auto& rule = quadrature::gauss_laguerre(n);
  long double sum = 0.0L;
  for (int i = 0; i < n; ++i) {
    const double v = h(rule.nodes[i]);
    if (!std::isfinite(v)) return {0.0, false};
    sum += static_cast<long double>(rule.weights[i]) * v;
  }
  return {static_cast<double>(sum), true};
}

// Internal accuracy target relative to QuadratureSpec::adaptive_tol. Both
// paths aim well below the requested tolerance so that results computed along
// different paths (say for g and for a*g + b) stay consistent with each other.
constexpr double kInternalFactor = 1e-2;

bool resolved(const WeibullR& d, double u) {
  const double x = d.from_cumulative_hazard(u);
  return std::isfinite(x) && x > d.support().lower;
}

// Bisects for the boundary between u with an unresolved quantile (on the
// support endpoint or beyond the double range) and u with a resolved one.
// `good` is the resolved side.
double resolution_edge(const WeibullR& d, double good, double bad) {
  for (int i = 0; i < 1100; ++i) {
    const double mid = 0.5 * (good + bad);
    if (mid == good || mid == bad) break;
    (resolved(d, mid) ? good : bad) = mid;
  }
  return good;
}

ExpectationResult adaptive_panels(const WeibullR& d, const std::function<double(double)>& h,
                                  const QuadratureSpec& q) {
  auto integrand = [&h](double u) { return std::exp(-u) * h(u); };
  const double target = kInternalFactor * q.adaptive_tol;

  double total = 0.0;
  double error = 0.0;
  double previous_total = 0.0;
  double previous_panel = 0.0;
  int growing = 0;
  int budget = q.max_subdivisions;

  for (double lo = 0.0, hi = kFirstPanel; hi <= kLastPanelEnd; lo = hi, hi *= 2.0) {
    const double epsabs = lo == 0.0 ? 1e-15 : 0.25 * target * std::fabs(total);
    bool truncated = false;
    auto panel = quadrature::integrate_adaptive(integrand, lo, hi, epsabs, 0.5 * target, budget);
    if (!panel.finite) {
      // Near u = 0 the quantile can round onto the support endpoint, and far
      // out it can overflow. Trim those pieces; they carry probability
      // 1 - e^-u_min and e^-u_max respectively.
      const double a = lo == 0.0 && !resolved(d, 1e-300) && resolved(d, hi / 2) ? resolution_edge(d, hi / 2, 0.0) : lo;
      truncated = !resolved(d, hi) && resolved(d, a);
      const double b = truncated ? resolution_edge(d, a, hi) : hi;
      if (a != lo || truncated) {
        panel = quadrature::integrate_adaptive(integrand, a, b, epsabs, 0.5 * target, budget);
        const double skipped = (a != lo ? -std::expm1(-a) : 0.0) + (truncated ? std::exp(-b) : 0.0);
        if (skipped > target * std::fabs(total + panel.value)) panel.finite = false;
      }
    }
    budget -= panel.subdivisions;
    if (!panel.finite) {
      throw DivergenceError("expectation: integrand is not finite for u in [" + shortest(lo) + ", " +
                                shortest(hi) + "]",
                            previous_total, total);
    }
    if (!panel.converged) {
      throw DivergenceError("expectation: no convergence within max_subdivisions",
                            previous_total, total + panel.value);
    }
    previous_total = total;
    total += panel.value;
    error += panel.abs_error;

    if (truncated) return {total, error, ExpectationMethod::adaptive};
    const double contribution = std::fabs(panel.value);
    if (lo > 0.0) {
      if (contribution <= 0.1 * target * std::fabs(total) + 1e-300) {
        // Remaining tail is dominated by this panel's contribution.
        return {total, error + contribution, ExpectationMethod::adaptive};
      }
      if (contribution >= std::fabs(previous_panel) && ++growing >= 2) {
        throw DivergenceError("expectation: integral grows with the truncation point",
                              previous_total, total);
      }
    }
    previous_panel = panel.value;
  }
  throw DivergenceError("expectation: tail did not decay before u = 2048", previous_total, total);
}

void require_shared_outer(const WeibullR& d1, const WeibullR& d2) {
  if (d1.c() != d2.c()) throw ParameterError("c", "both models must share the same c");
  if (d1.gamma() != d2.gamma()) {
    throw ParameterError("gamma", "both models must share the same gamma");
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (laguerre_nodes < 2) throw ParameterError("laguerre_nodes", "must be >= 2");
  if (!(adaptive_tol > 0.0)) throw ParameterError("adaptive_tol", "must be positive");
  if (max_subdivisions < 1) throw ParameterError("max_subdivisions", "must be >= 1");
}

ExpectationResult expect(const WeibullR& d, const std::function<double(double)>& g,
                         const QuadratureSpec& q) {
  q.validate();
  auto h = [&](double u) { return g(d.from_cumulative_hazard(u)); };

  const auto coarse = laguerre_sum(h, q.laguerre_nodes);
  const auto fine = laguerre_sum(h, 2 * q.laguerre_nodes);
  if (coarse.finite && fine.finite) {
    const double diff = std::fabs(fine.value - coarse.value);
    if (diff <= kInternalFactor * q.adaptive_tol * std::fabs(fine.value) + 1e-15) {
      return {fine.value, diff, ExpectationMethod::gauss_laguerre};
    }
  }
  return adaptive_panels(d, h, q);
}

ExpectationResult moment(const WeibullR& d, int r, const QuadratureSpec& q) {
  if (r < 1) throw DomainError("moment: order must be >= 1");
  return expect(d, [r](double x) { return std::pow(x, r); }, q);
}

ExpectationResult shannon_entropy(const WeibullR& d, const QuadratureSpec& q) {
  const Baseline& b = d.baseline();
  const auto log_hazard = expect(d, [&b](double x) { return b.log_hazard(x); }, q);
  const double c = d.c();
  const double euler = static_cast<double>(specfun::kEulerGamma);
  const double eta =
      -std::log(c) + std::log(d.gamma()) + (c - 1.0) * euler / c - log_hazard.value + 1.0;
  return {eta, log_hazard.abs_error_estimate, log_hazard.method};
}

DiscriminationTerms discrimination_terms(double x, const WeibullR& d1, const WeibullR& d2) {
  require_shared_outer(d1, d2);
  if (std::isnan(x) || !d1.support().contains(x) || !d2.support().contains(x)) {
    throw DomainError("discrimination: point " + shortest(x) +
                      " is not inside both supports");
  }
  const Baseline& b1 = d1.baseline();
  const Baseline& b2 = d2.baseline();
  const double ls1 = b1.log_survival(x);
  const double ls2 = b2.log_survival(x);
  const double c = d1.c();
  const double gamma = d1.gamma();
  return {
      std::log(-ls2) - std::log(-ls1),
      b2.log_hazard(x) - b1.log_hazard(x),
      std::pow(-ls1 / gamma, c),
      std::pow(-ls2 / gamma, c),
      ls2 - ls1,
  };
}

double discrimination_D(std::span<const double> sample, const WeibullR& d1, const WeibullR& d2) {
  if (sample.empty()) throw DomainError("discrimination_D: sample is empty");
  long double log_h_ratio = 0.0L;
  long double log_hazard_ratio = 0.0L;
  long double power1 = 0.0L;
  long double power2 = 0.0L;
  for (double x : sample) {
    const auto t = discrimination_terms(x, d1, d2);
    log_h_ratio += t.log_cumulative_hazard_ratio;
    log_hazard_ratio += t.log_hazard_ratio;
    power1 += t.scaled_power_1;
    power2 += t.scaled_power_2;
  }
  const long double n = static_cast<long double>(sample.size());
  const long double c = d1.c();
  return static_cast<double>((c - 1.0L) * log_h_ratio / n + log_hazard_ratio / n +
                             (power1 - power2) / n);
}

}  // namespace weibullr
