#pragma once

#include <functional>
#include <span>

#include "weibullr/weibull_r.hpp"

namespace weibullr {

struct QuadratureSpec {
  int laguerre_nodes = 64;
  double adaptive_tol = 1e-8;
  int max_subdivisions = 200;

  void validate() const;
};

enum class ExpectationMethod { gauss_laguerre, adaptive };

struct ExpectationResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  ExpectationMethod method = ExpectationMethod::gauss_laguerre;
};

/// E[g(X)] through the substitution u = [H_R(x) / gamma]^c, which turns the
/// expectation into integral_0^inf e^-u g(x(u)) du.
///
/// Gauss-Laguerre with N and 2N nodes is tried first. When the two disagree
/// by more than the tolerance the integral is recomputed by adaptive
/// Gauss-Kronrod over [0, 32], [32, 64], [64, 128], ... until a panel stops
/// contributing. Panels that grow with the truncation point, a non-finite
/// integrand or an exhausted subdivision budget raise DivergenceError.
ExpectationResult expect(const WeibullR& d, const std::function<double(double)>& g,
                         const QuadratureSpec& q = {});

/// E[X^r], r >= 1.
ExpectationResult moment(const WeibullR& d, int r, const QuadratureSpec& q = {});

/// Shannon entropy E[-ln f_X(X)].
///
/// E[(H_R/gamma)^c] = 1 and E[ln(H_R/gamma)] = -gamma_E / c are used exactly;
/// only E[ln h_R(X)] needs quadrature.
ExpectationResult shannon_entropy(const WeibullR& d, const QuadratureSpec& q = {});

/// Pointwise ingredients of the entropy-difference statistic for two models
/// sharing (c, gamma). Index 1 refers to d1, 2 to d2.
struct DiscriminationTerms {
  double log_cumulative_hazard_ratio;  // ln(H_R2 / H_R1)
  double log_hazard_ratio;             // ln(h_R2 / h_R1)
  double scaled_power_1;               // (H_R1 / gamma)^c
  double scaled_power_2;               // (H_R2 / gamma)^c
  double log_survival_ratio;           // ln(S_R2 / S_R1)
};

DiscriminationTerms discrimination_terms(double x, const WeibullR& d1, const WeibullR& d2);

/// Sample plug-in of eta_1 - eta_2:
///   (c-1) mean ln(H_R2/H_R1) + mean ln(h_R2/h_R1)
///     + mean (H_R1/gamma)^c - mean (H_R2/gamma)^c.
/// Large values favour d1.
double discrimination_D(std::span<const double> sample, const WeibullR& d1, const WeibullR& d2);

}  // namespace weibullr
