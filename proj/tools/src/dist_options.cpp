#include "dist_options.hpp"

#include "input.hpp"

namespace weibullr::cli {

WeibullR DistOptions::model() const {
  if (baseline.empty()) throw UsageError("--baseline is required");
  const Family family = family_from_name(baseline.front());
  std::vector<double> params;
  for (std::size_t i = 1; i < baseline.size(); ++i) params.push_back(parse_double(baseline[i], "--baseline"));
  return WeibullR({c, gamma}, make_baseline(family, params));
}

void add_dist_options(CLI::App& app, DistOptions& options) {
  app.add_option("--c", options.c, "Weibull shape c > 0")->required();
  app.add_option("--gamma", options.gamma, "Weibull scale gamma > 0")->required();
  app.add_option("--baseline", options.baseline,
                 "Baseline family and parameters: pareto K THETA | lomax K THETA | cauchy DELTA | "
                 "normal MU SIGMA | weibull K LAMBDA | exponential LAMBDA")
      ->required()
      ->expected(2, 3)
      ->allow_extra_args(false);
}

void add_format_option(CLI::App& app, FormatOption& option) {
  app.add_option("--format", option.name, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::vector<double> PointOptions::resolve() const {
  if (!grid.empty()) return parse_grid(grid);
  return points;
}

void add_point_options(CLI::App& app, PointOptions& options, const std::string& points_flag) {
  auto* grid = app.add_option("--grid", options.grid, "Evenly spaced points lo:hi:n");
  auto* points = app.add_option(points_flag, options.points, "Explicit points, comma separated")
                     ->delimiter(',');
  grid->excludes(points);
  points->excludes(grid);
}

}  // namespace weibullr::cli
