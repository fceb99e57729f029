#include "weibullr/random.hpp"

#include <cmath>

namespace weibullr {

double RandomSource::exponential() { return -std::log1p(-uniform()); }

double RandomSource::normal() {
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double RandomSource::gamma_integer(int shape) {
  double g = 0.0;
  for (int i = 0; i < shape; ++i) g += exponential();
  return g;
}

}  // namespace weibullr
