#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "weibullr/baseline.hpp"

namespace fixtures {

struct NamedBaseline {
  std::string label;
  weibullr::BaselinePtr baseline;
};

// Three parameter settings for each of the six families.
inline std::vector<NamedBaseline> all_baselines() {
  using namespace weibullr;
  return {
      {"pareto(2,3)", make_pareto(2.0, 3.0)},
      {"pareto(0.7,1)", make_pareto(0.7, 1.0)},
      {"pareto(5,0.5)", make_pareto(5.0, 0.5)},
      {"lomax(1,1)", make_lomax(1.0, 1.0)},
      {"lomax(3,2)", make_lomax(3.0, 2.0)},
      {"lomax(0.5,0.1)", make_lomax(0.5, 0.1)},
      {"cauchy(1)", make_cauchy(1.0)},
      {"cauchy(0.2)", make_cauchy(0.2)},
      {"cauchy(5)", make_cauchy(5.0)},
      {"normal(0,1)", make_normal(0.0, 1.0)},
      {"normal(-3,0.5)", make_normal(-3.0, 0.5)},
      {"normal(10,4)", make_normal(10.0, 4.0)},
      {"weibull(2,1)", make_weibull(2.0, 1.0)},
      {"weibull(0.6,3)", make_weibull(0.6, 3.0)},
      {"weibull(4,0.5)", make_weibull(4.0, 0.5)},
      {"exponential(1)", make_exponential(1.0)},
      {"exponential(3)", make_exponential(3.0)},
      {"exponential(0.25)", make_exponential(0.25)},
  };
}

// Log-spaced probabilities in (1e-9, 1 - 1e-9), dense in both tails.
inline std::vector<double> tail_probabilities(int per_decade = 10) {
  std::vector<double> ps;
  for (int i = 0; i <= 9 * per_decade; ++i) {
    const double e = -9.0 + static_cast<double>(i) / per_decade;
    const double p = std::pow(10.0, e);
    if (p < 0.5) {
      ps.push_back(p);
      ps.push_back(1.0 - p);
    }
  }
  ps.push_back(0.5);
  return ps;
}

// |cdf(x) - p| <= 1e-9 for x = quantile(p). Where the cdf moves by more than
// that between adjacent doubles (a bounded support just above its endpoint),
// the exact quantile is not representable and x must instead be one of the
// two doubles bracketing it.
template <class D>
bool roundtrip_ok(const D& d, double p, double x) {
  if (std::fabs(d.cdf(x) - p) <= 1e-9) return true;
  const double below = d.cdf(std::nextafter(x, -HUGE_VAL));
  const double above = d.cdf(std::nextafter(x, HUGE_VAL));
  return below <= p && p <= above;
}

// Probability that X is not representable away from the support endpoint:
// mass on [lower, next double above lower] plus mass above the largest
// finite double.
template <class D>
double unresolved_mass(const D& d) {
  const double lower = d.support().lower;
  double mass = d.survival(std::numeric_limits<double>::max());
  if (std::isfinite(lower)) mass += d.cdf(std::nextafter(lower, HUGE_VAL));
  return mass;
}

}  // namespace fixtures
