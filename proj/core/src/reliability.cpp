#include "weibullr/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weibullr/errors.hpp"
#include "weibullr/quadrature.hpp"
#include "weibullr/specfun.hpp"

namespace weibullr {
namespace {

// e^-37 < 1e-16 bounds the discarded tail of the integrand.
constexpr double kTruncation = 37.0;

}  // namespace

void ReliabilityQuery::validate() const {
  if (!(c1 > 0.0) || !std::isfinite(c1)) throw ParameterError("c1", "must be positive and finite");
  if (!(c2 > 0.0) || !std::isfinite(c2)) throw ParameterError("c2", "must be positive and finite");
  if (kmax < 1) throw ParameterError("kmax", "must be >= 1");
}

double reliability_series(const ReliabilityQuery& q) {
  q.validate();
  const double ratio = q.ratio();
  if (ratio > kSeriesRatioLimit) {
    throw DomainError("reliability_series: c2/c1 = " + std::to_string(ratio) +
                      " exceeds 0.9 where the series stops converging; use reliability()");
  }
  long double sum = 0.0L;
  for (int k = 0; k <= q.kmax; ++k) {
    const double log_mag = specfun::log_gamma(k * ratio + 1.0) - specfun::log_gamma(k + 1.0);
    const long double term = std::exp(static_cast<long double>(log_mag));
    sum += (k % 2 == 0) ? term : -term;
    if (k > 0 && term < 1e-14L) return static_cast<double>(1.0L - sum);
  }
  throw ConvergenceError("reliability_series: kmax reached before terms fell below 1e-14");
}

double reliability_quadrature(const ReliabilityQuery& q) {
  q.validate();
  const double ratio = q.ratio();
  auto integrand = [ratio](double u) { return std::exp(-u - std::pow(u, ratio)); };
  const auto r = quadrature::integrate_adaptive(integrand, 0.0, kTruncation, 1e-13, 0.0, 2000);
  if (!r.converged) {
    throw ConvergenceError("reliability_quadrature: subdivision limit reached");
  }
  return 1.0 - r.value;
}

double reliability(const ReliabilityQuery& q) {
  q.validate();
  double r;
  if (q.c2 == q.c1) {
    r = 0.5;
  } else if (q.ratio() <= kSeriesRatioLimit) {
    r = reliability_series(q);
  } else if (q.c1 / q.c2 <= kSeriesRatioLimit) {
    r = 1.0 - reliability_series({q.c2, q.c1, q.kmax});
  } else {
    r = reliability_quadrature(q);
  }
  return std::clamp(r, 0.0, 1.0);
}

double reliability(const WeibullR& x, const WeibullR& y) {
  if (x.gamma() != y.gamma()) throw ParameterError("gamma", "X and Y must share gamma");
  if (!x.baseline().same_as(y.baseline())) {
    throw ParameterError("baseline", "X and Y must share the baseline distribution");
  }
  return reliability(ReliabilityQuery{x.c(), y.c()});
}

}  // namespace weibullr
