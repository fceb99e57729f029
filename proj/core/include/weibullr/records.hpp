#pragma once

#include <cstddef>
#include <vector>

#include "weibullr/random.hpp"
#include "weibullr/weibull_r.hpp"

namespace weibullr {

/// Upper record indices 1 <= m < n.
struct RecordQuery {
  int m = 1;
  int n = 2;

  void validate() const;
};

/// Joint density of the m-th and n-th upper records at (x, y):
///
///   [H_X(y) - H_X(x)]^(n-m-1) H_X(x)^(m-1) f_X(x) f_X(y)
///     / (Gamma(m) Gamma(n-m) (1 - F_X(x)))
///
/// with H_X the cumulative hazard of X. Zero unless x < y.
double joint_record_pdf(const WeibullR& d, const RecordQuery& q, double x, double y);

/// Marginal density of the m-th upper record, f_X(x) H_X(x)^(m-1) / Gamma(m).
double record_marginal_pdf_closed(const WeibullR& d, int m, double x);

/// The same marginal obtained by integrating y out of the joint density term
/// by term. With w = H_X(x) and N = n - m - 1:
///
///   f_X(x) e^w w^(m-1) / (Gamma(m) Gamma(n-m))
///     * sum_j (-1)^(N-j) C(N, j) w^(N-j) Gamma(j+1, w)
///
/// The alternating sum is accumulated in extended precision; if the largest
/// term exceeds the result by more than 1e12, CancellationError is raised.
double record_marginal_pdf_series(const WeibullR& d, const RecordQuery& q, double x);

/// n_paths independent draws of the m-th upper record: G ~ Gamma(m, 1) mapped
/// back through the cumulative hazard.
std::vector<double> sample_records(const WeibullR& d, int m, std::size_t n_paths,
                                   RandomSource& rng);

}  // namespace weibullr
