#pragma once

#include <functional>
#include <span>
#include <vector>

namespace weibullr {

struct SimplexOptions {
  int max_iters = 2000;
  double ftol = 1e-9;         // relative spread of objective values across the simplex
  double initial_step = 0.5;  // edge length of the starting simplex
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead minimisation. NaN objective values are treated as +inf.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                          std::vector<double> start, const SimplexOptions& options = {});

}  // namespace weibullr
