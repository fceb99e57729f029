#pragma once

#include <functional>
#include <vector>

namespace weibullr::quadrature {

/// n-point Gauss-Laguerre rule for integral_0^inf e^-u f(u) du.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are computed once per n and shared read-only; safe to call
/// concurrently.
const GaussLaguerreRule& gauss_laguerre(int n);

struct AdaptiveResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
  bool converged = false;
  bool finite = true;  // false if the integrand returned inf or NaN
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. Stops once the summed
/// error estimate is below max(epsabs, epsrel * |value|) or after
/// max_subdivisions bisections. The integrand is never evaluated at a or b.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double epsabs, double epsrel, int max_subdivisions);

}  // namespace weibullr::quadrature
