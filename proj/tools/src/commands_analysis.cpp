// moments, entropy, reliability and records.
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "dist_options.hpp"
#include "input.hpp"
#include "weibullr/expectation.hpp"
#include "weibullr/records.hpp"
#include "weibullr/reliability.hpp"

namespace weibullr::cli {
namespace {

void add_quadrature_options(CLI::App& app, QuadratureSpec& q) {
  app.add_option("--nodes", q.laguerre_nodes, "Gauss-Laguerre nodes")->capture_default_str();
  app.add_option("--tol", q.adaptive_tol, "Relative tolerance")->capture_default_str();
  app.add_option("--max-subdivisions", q.max_subdivisions, "Adaptive subdivision budget")
      ->capture_default_str();
}

}  // namespace

void register_moments(CLI::App& app) {
  struct Options {
    DistOptions dist;
    FormatOption format;
    QuadratureSpec quadrature;
    std::vector<int> orders = {1, 2};
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("moments", "Raw moments E[X^r]");
  add_dist_options(*cmd, opts->dist);
  add_format_option(*cmd, opts->format);
  add_quadrature_options(*cmd, opts->quadrature);
  cmd->add_option("--order", opts->orders, "Orders r >= 1, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  cmd->callback([opts] {
    const WeibullR d = opts->dist.model();
    Scalars out;
    for (int r : opts->orders) out.add("moment_" + std::to_string(r), moment(d, r, opts->quadrature).value);
    write(std::cout, out, opts->format.format());
  });
}

void register_entropy(CLI::App& app) {
  struct Options {
    DistOptions dist;
    FormatOption format;
    QuadratureSpec quadrature;
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("entropy", "Shannon entropy");
  add_dist_options(*cmd, opts->dist);
  add_format_option(*cmd, opts->format);
  add_quadrature_options(*cmd, opts->quadrature);
  cmd->callback([opts] {
    const auto result = shannon_entropy(opts->dist.model(), opts->quadrature);
    Scalars out;
    out.add("entropy", result.value);
    write(std::cout, out, opts->format.format());
  });
}

void register_reliability(CLI::App& app) {
  struct Options {
    FormatOption format;
    ReliabilityQuery query;
    std::string method = "auto";
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("reliability", "Stress-strength P(X > Y) for shapes c1 (X) and c2 (Y)");
  add_format_option(*cmd, opts->format);
  cmd->add_option("--c1", opts->query.c1, "Shape of X")->required();
  cmd->add_option("--c2", opts->query.c2, "Shape of Y")->required();
  cmd->add_option("--kmax", opts->query.kmax, "Series term cap")->capture_default_str();
  cmd->add_option("--method", opts->method, "Evaluation path")
      ->check(CLI::IsMember({"auto", "series", "quadrature"}))
      ->capture_default_str();
  cmd->callback([opts] {
    const auto& q = opts->query;
    double r = 0.0;
    if (opts->method == "series") r = reliability_series(q);
    else if (opts->method == "quadrature") r = reliability_quadrature(q);
    else r = reliability(q);
    Scalars out;
    out.add("R", r);
    write(std::cout, out, opts->format.format());
  });
}

void register_records(CLI::App& app) {
  struct Options {
    DistOptions dist;
    FormatOption format;
    PointOptions points;
    int m = 1;
    int n = 0;
    long long sample = -1;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("records", "Upper record densities and draws");
  add_dist_options(*cmd, opts->dist);
  add_format_option(*cmd, opts->format);
  add_point_options(*cmd, opts->points, "--pdf-at");
  cmd->add_option("--m", opts->m, "Record index m >= 1")->required();
  cmd->add_option("--n", opts->n, "Evaluate through the series over the joint density with n > m");
  auto* sample = cmd->add_option("--sample", opts->sample, "Draw this many m-th records instead")
                     ->check(CLI::Range(0LL, 100000000LL));
  auto* seed = cmd->add_option("--seed", opts->seed, "Random seed (with --sample)");
  sample->needs(seed);
  cmd->callback([opts] {
    const WeibullR d = opts->dist.model();
    if (opts->sample >= 0) {
      RandomSource rng(opts->seed);
      Table table{{"x"}, {}};
      for (double x : sample_records(d, opts->m, static_cast<std::size_t>(opts->sample), rng)) {
        table.rows.push_back({x});
      }
      write(std::cout, table, opts->format.format());
      return;
    }
    const auto xs = opts->points.resolve();
    if (xs.empty()) throw UsageError("records needs --pdf-at, --grid or --sample");
    Table table{{"x", "record_pdf"}, {}};
    for (double x : xs) {
      const double v = opts->n > 0 ? record_marginal_pdf_series(d, {opts->m, opts->n}, x)
                                   : record_marginal_pdf_closed(d, opts->m, x);
      table.rows.push_back({x, v});
    }
    write(std::cout, table, opts->format.format());
  });
}

}  // namespace weibullr::cli
