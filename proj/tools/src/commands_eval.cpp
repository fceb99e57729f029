// eval, sample and plotdata: pointwise evaluation and draws.
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "dist_options.hpp"
#include "input.hpp"
#include "weibullr/random.hpp"

namespace weibullr::cli {

void register_eval(CLI::App& app) {
  struct Options {
    DistOptions dist;
    PointOptions points;
    FormatOption format;
    std::string what = "pdf";
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("eval", "Evaluate a function of the distribution at points");
  add_dist_options(*cmd, opts->dist);
  add_point_options(*cmd, opts->points);
  add_format_option(*cmd, opts->format);
  cmd->add_option("--what", opts->what, "Quantity to evaluate")
      ->check(CLI::IsMember({"pdf", "log_pdf", "cdf", "survival", "hazard", "cumulative_hazard", "quantile"}))
      ->capture_default_str();
  cmd->callback([opts] {
    const auto xs = opts->points.resolve();
    if (xs.empty()) throw UsageError("eval needs --grid or --points");
    const WeibullR d = opts->dist.model();
    const std::string& w = opts->what;
    Table table{{"x", w}, {}};
    for (double x : xs) {
      double v = 0.0;
      if (w == "pdf") v = d.pdf(x);
      else if (w == "log_pdf") v = d.log_pdf(x);
      else if (w == "cdf") v = d.cdf(x);
      else if (w == "survival") v = d.survival(x);
      else if (w == "hazard") v = d.hazard(x);
      else if (w == "cumulative_hazard") v = d.cumulative_hazard(x);
      else v = d.quantile(x);
      table.rows.push_back({x, v});
    }
    write(std::cout, table, opts->format.format());
  });
}

void register_sample(CLI::App& app) {
  struct Options {
    DistOptions dist;
    FormatOption format;
    long long n = 0;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("sample", "Draw a seeded random sample");
  add_dist_options(*cmd, opts->dist);
  add_format_option(*cmd, opts->format);
  cmd->add_option("--n", opts->n, "Number of draws")->required()->check(CLI::Range(0LL, 100000000LL));
  cmd->add_option("--seed", opts->seed, "Random seed")->required();
  cmd->callback([opts] {
    const WeibullR d = opts->dist.model();
    RandomSource rng(opts->seed);
    Table table{{"x"}, {}};
    for (double x : d.sample(static_cast<std::size_t>(opts->n), rng)) table.rows.push_back({x});
    write(std::cout, table, opts->format.format());
  });
}

void register_plotdata(CLI::App& app) {
  struct Options {
    DistOptions dist;
    FormatOption format;
    std::string grid;
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("plotdata", "Density, cdf and hazard curves on a grid");
  add_dist_options(*cmd, opts->dist);
  add_format_option(*cmd, opts->format);
  cmd->add_option("--grid", opts->grid,
                  "Points lo:hi:n; default 200 points between the 0.001 and 0.999 quantiles");
  cmd->callback([opts] {
    const WeibullR d = opts->dist.model();
    std::vector<double> xs;
    if (opts->grid.empty()) {
      xs = parse_grid(format_number(d.quantile(0.001)) + ":" + format_number(d.quantile(0.999)) + ":200");
    } else {
      xs = parse_grid(opts->grid);
    }
    Table table{{"x", "pdf", "cdf", "hazard"}, {}};
    for (double x : xs) {
      // Off the support the hazard is undefined; pdf and cdf still are.
      const bool inside = d.support().contains_closed(x);
      table.rows.push_back({x, d.pdf(x), d.cdf(x), inside ? d.hazard(x) : 0.0});
    }
    write(std::cout, table, opts->format.format());
  });
}

}  // namespace weibullr::cli
