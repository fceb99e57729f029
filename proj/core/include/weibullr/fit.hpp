#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weibullr/random.hpp"
#include "weibullr/weibull_r.hpp"

namespace weibullr {

/// What to fit and how.
///
/// Parameter names are "c", "gamma" and the baseline's own names (see
/// family_parameter_names). `free` lists the searched parameters; the rest are
/// held at their initial values. An empty list selects the family default,
/// which leaves out the directions along which the likelihood is flat (for
/// example gamma with a Lomax baseline, where only k / gamma is identified).
/// A Pareto theta is never searched: it is profiled at min(data) * (1 - 1e-6).
struct FitSpec {
  Family family = Family::lomax;
  double c_init = 1.0;
  double gamma_init = 1.0;
  std::vector<std::optional<double>> baseline_init;  // CLI order; missing -> data heuristic
  std::vector<std::string> free;
  int max_iters = 2000;
  double tol = 1e-9;
  int starts = 5;
  bool log_transform = true;

  void validate() const;
};

/// Reads the flat `key = value` format (one pair per line, `#` comments).
FitSpec parse_fit_spec(std::string_view text);
std::string to_text(const FitSpec& spec);

/// Names searched by default for a family.
std::vector<std::string> default_free_parameters(Family family);

struct FitResult {
  Family family = Family::lomax;
  WeibullRParams params;
  std::vector<double> baseline_params;
  double log_likelihood = 0.0;
  bool converged = false;
  int iterations = 0;
  int best_start = 0;
  /// Best log-likelihood seen after each start; nondecreasing.
  std::vector<double> best_by_start;

  WeibullR model() const;
};

/// Sum of log_pdf over the data; -inf if any point lies outside the support.
double log_likelihood(const WeibullR& d, std::span<const double> data);

/// Multi-start Nelder-Mead maximum likelihood. Start 0 is the initial point;
/// the others are jittered from it with draws from `rng`.
FitResult fit_mle(std::span<const double> data, const FitSpec& spec, RandomSource& rng);

}  // namespace weibullr
