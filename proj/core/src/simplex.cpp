#include "weibullr/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace weibullr {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                          std::vector<double> start, const SimplexOptions& options) {
  const std::size_t dim = start.size();
  auto eval = [&](const std::vector<double>& p) {
    const double v = objective(p);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<std::vector<double>> vertices(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) vertices[i + 1][i] += options.initial_step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(vertices[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  SimplexResult result;

  auto point_along = [&](double t, std::vector<double>& out, std::size_t worst) {
    for (std::size_t j = 0; j < dim; ++j) {
      out[j] = centroid[j] + t * (vertices[worst][j] - centroid[j]);
    }
  };

  for (result.iterations = 0; result.iterations < options.max_iters; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - (dim > 0 ? 1 : 0)];

    const double lo = values[best];
    const double hi = values[worst];
    if (std::isfinite(hi) &&
        2.0 * std::fabs(hi - lo) <= options.ftol * (std::fabs(hi) + std::fabs(lo)) + 1e-300) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += vertices[i][j] / dim;
    }

    point_along(-kReflect, trial, worst);
    const double f_reflect = eval(trial);
    if (f_reflect < lo) {
      point_along(-kReflect * kExpand, trial2, worst);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        vertices[worst] = trial2;
        values[worst] = f_expand;
      } else {
        vertices[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second]) {
      vertices[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Contract towards the better of the worst vertex and its reflection.
    const bool outside = f_reflect < hi;
    point_along(outside ? -kContract : kContract, trial2, worst);
    const double f_contract = eval(trial2);
    if (f_contract < std::min(f_reflect, hi)) {
      vertices[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        vertices[i][j] = vertices[best][j] + kShrink * (vertices[i][j] - vertices[best][j]);
      }
      values[i] = eval(vertices[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  result.x = vertices[best];
  result.value = values[best];
  return result;
}

}  // namespace weibullr
