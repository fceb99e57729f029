#include "weibullr/records.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "weibullr/errors.hpp"
#include "weibullr/specfun.hpp"

namespace weibullr {
namespace {

constexpr double kCancellationLimit = 1e12;

void require_index(int m) {
  if (m < 1) throw ParameterError("m", "record index must be >= 1, got " + std::to_string(m));
}

void require_point(const WeibullR& d, double x) {
  if (!std::isfinite(x) || !d.support().contains_closed(x)) {
    throw DomainError("record density: x = " + std::to_string(x) + " is outside the support");
  }
}

// k * ln(w), with the 0 * ln(0) = 0 convention for empty powers.
double log_power(double w, int k) { return k == 0 ? 0.0 : k * std::log(w); }

}  // namespace

void RecordQuery::validate() const {
  if (m < 1) throw ParameterError("m", "record index must be >= 1");
  if (n <= m) throw ParameterError("n", "must exceed m");
}

double joint_record_pdf(const WeibullR& d, const RecordQuery& q, double x, double y) {
  q.validate();
  require_point(d, x);
  require_point(d, y);
  if (!(x < y)) return 0.0;
  const double hx = d.cumulative_hazard(x);
  const double hy = d.cumulative_hazard(y);
  const double log_density = log_power(hy - hx, q.n - q.m - 1) + log_power(hx, q.m - 1) +
                             d.log_pdf(x) + d.log_pdf(y) + hx - specfun::log_gamma(q.m) -
                             specfun::log_gamma(q.n - q.m);
  return std::exp(log_density);
}

double record_marginal_pdf_closed(const WeibullR& d, int m, double x) {
  require_index(m);
  require_point(d, x);
  const double log_f = d.log_pdf(x);
  if (log_f == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(log_f + log_power(d.cumulative_hazard(x), m - 1) - specfun::log_gamma(m));
}

double record_marginal_pdf_series(const WeibullR& d, const RecordQuery& q, double x) {
  q.validate();
  require_point(d, x);
  const double log_f = d.log_pdf(x);
  if (log_f == -std::numeric_limits<double>::infinity()) return 0.0;
  const double w = d.cumulative_hazard(x);
  const int big_n = q.n - q.m - 1;

  const double log_prefix = log_f + w + log_power(w, q.m - 1) -
                            specfun::log_gamma(q.m) - specfun::log_gamma(q.n - q.m);
  if (w == 0.0) {
    // Only the j = N term survives: C(N, N) Gamma(N+1, 0) = N!.
    return std::exp(log_prefix + specfun::log_gamma(big_n + 1.0));
  }

  // Terms are scaled by e^-shift to keep them representable; shift is the
  // log-magnitude of the largest one.
  std::vector<double> log_terms(big_n + 1);
  double shift = -std::numeric_limits<double>::infinity();
  const double log_w = std::log(w);
  for (int j = 0; j <= big_n; ++j) {
    const double log_binom = specfun::log_gamma(big_n + 1.0) - specfun::log_gamma(j + 1.0) -
                             specfun::log_gamma(big_n - j + 1.0);
    log_terms[j] = log_binom + (big_n - j) * log_w +
                   specfun::log_upper_incomplete_gamma(j + 1.0, w);
    shift = std::fmax(shift, log_terms[j]);
  }
  long double sum = 0.0L;
  for (int j = 0; j <= big_n; ++j) {
    const long double term = std::exp(static_cast<long double>(log_terms[j] - shift));
    sum += ((big_n - j) % 2 == 0) ? term : -term;
  }
  if (!(sum > 0.0L) || 1.0L / sum > kCancellationLimit) {
    throw CancellationError("record_marginal_pdf_series: alternating sum lost more than 12 "
                            "digits at x = " + std::to_string(x) +
                            "; use record_marginal_pdf_closed");
  }
  return std::exp(log_prefix + shift + static_cast<double>(std::log(sum)));
}

std::vector<double> sample_records(const WeibullR& d, int m, std::size_t n_paths,
                                   RandomSource& rng) {
  require_index(m);
  std::vector<double> out;
  out.reserve(n_paths);
  for (std::size_t i = 0; i < n_paths; ++i) {
    out.push_back(d.from_cumulative_hazard(rng.gamma_integer(m)));
  }
  return out;
}

}  // namespace weibullr
