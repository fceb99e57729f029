#pragma once

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output.hpp"
#include "weibullr/weibull_r.hpp"

namespace weibullr::cli {

/// `--c C --gamma G --baseline <family> <params...>`
struct DistOptions {
  double c = 1.0;
  double gamma = 1.0;
  std::vector<std::string> baseline;

  WeibullR model() const;
};

void add_dist_options(CLI::App& app, DistOptions& options);

struct FormatOption {
  std::string name = "csv";

  Format format() const { return name == "json" ? Format::json : Format::csv; }
};

void add_format_option(CLI::App& app, FormatOption& option);

/// `--grid lo:hi:n` or `--points a,b,c`; exactly one of them.
struct PointOptions {
  std::string grid;
  std::vector<double> points;

  std::vector<double> resolve() const;
};

void add_point_options(CLI::App& app, PointOptions& options, const std::string& points_flag = "--points");

}  // namespace weibullr::cli
