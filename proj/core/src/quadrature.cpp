#include "weibullr/quadrature.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "weibullr/errors.hpp"

namespace weibullr::quadrature {
namespace {

// Newton iteration on L_n with the classical asymptotic starting guesses,
// carried out in extended precision.
GaussLaguerreRule build_gauss_laguerre(int n) {
  using real = long double;
  GaussLaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<real> x(n);
  real z = 0.0L;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0L / (1.0L + 2.4L * n);
    } else if (i == 1) {
      z += 15.0L / (1.0L + 2.5L * n);
    } else {
      const real ai = i - 1;
      z += (1.0L + 2.55L * ai) / (1.9L * ai) * (z - x[i - 2]);
    }
    real p1 = 0.0L, p2 = 0.0L, pp = 0.0L;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      p1 = 1.0L;
      p2 = 0.0L;
      for (int j = 1; j <= n; ++j) {
        const real p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
      }
      pp = (n * p1 - n * p2) / z;
      const real z1 = z;
      z = z1 - p1 / pp;
      // Well below double resolution; the recurrence itself is only good to a
      // few hundred long double ulps at large n.
      if (std::fabs(z - z1) <= 1e-17L * std::fabs(z)) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ConvergenceError("Gauss-Laguerre node iteration did not converge");
    x[i] = z;
    rule.nodes[i] = static_cast<double>(z);
    rule.weights[i] = static_cast<double>(-1.0L / (pp * n * p2));
  }
  return rule;
}

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b, bool& finite) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  const double error = std::fabs((kronrod - gauss) * half);
  if (!std::isfinite(value) || !std::isfinite(error)) finite = false;
  return {a, b, value, error};
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int n) {
  if (n < 2) throw DomainError("Gauss-Laguerre rule needs at least 2 nodes");
  static std::mutex mutex;
  static std::map<int, GaussLaguerreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_laguerre(n)).first;
  return it->second;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double epsabs, double epsrel, int max_subdivisions) {
  AdaptiveResult result;
  std::priority_queue<Segment> heap;
  heap.push(kronrod15(f, a, b, result.finite));
  double value = heap.top().value;
  double error = heap.top().error;

  while (result.finite) {
    if (error <= std::fmax(epsabs, epsrel * std::fabs(value))) {
      result.converged = true;
      break;
    }
    if (result.subdivisions >= max_subdivisions) break;
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval can no longer be split in floating point.
      heap.push(worst);
      break;
    }
    const Segment left = kronrod15(f, worst.a, mid, result.finite);
    const Segment right = kronrod15(f, mid, worst.b, result.finite);
    heap.push(left);
    heap.push(right);
    ++result.subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }

  // Re-sum to shed the drift from incremental updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  result.value = value;
  result.abs_error = error;
  if (!result.converged && result.finite) {
    result.converged = error <= std::fmax(epsabs, epsrel * std::fabs(value));
  }
  return result;
}

}  // namespace weibullr::quadrature
