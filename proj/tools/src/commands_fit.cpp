#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "commands.hpp"
#include "dist_options.hpp"
#include "input.hpp"
#include "weibullr/fit.hpp"

namespace weibullr::cli {

void register_fit(CLI::App& app) {
  struct Options {
    FormatOption format;
    std::string input;
    std::string spec_path;
    std::string family;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("fit", "Maximum-likelihood fit to a data file");
  add_format_option(*cmd, opts->format);
  cmd->add_option("--input", opts->input, "Data: one value per line, optional header")->required();
  auto* spec = cmd->add_option("--spec", opts->spec_path, "Fit spec file (key = value lines)");
  auto* family = cmd->add_option("--family", opts->family, "Baseline family, when no spec file is given");
  spec->excludes(family);
  cmd->add_option("--seed", opts->seed, "Random seed for the multi-start jitter")->required();
  cmd->callback([opts] {
    FitSpec fit_spec;
    if (!opts->spec_path.empty()) {
      std::ifstream in(opts->spec_path);
      if (!in) throw UsageError("cannot open spec file '" + opts->spec_path + "'");
      std::stringstream text;
      text << in.rdbuf();
      fit_spec = parse_fit_spec(text.str());
    } else if (!opts->family.empty()) {
      fit_spec.family = family_from_name(opts->family);
    } else {
      throw UsageError("fit needs --spec or --family");
    }
    const auto data = read_column(opts->input);
    RandomSource rng(opts->seed);
    const auto result = fit_mle(data, fit_spec, rng);

    Scalars out;
    out.add("family", std::string(family_name(result.family)));
    out.add("c", result.params.c);
    out.add("gamma", result.params.gamma);
    const auto names = family_parameter_names(result.family);
    for (std::size_t i = 0; i < names.size(); ++i) out.add(std::string(names[i]), result.baseline_params[i]);
    out.add("log_likelihood", result.log_likelihood);
    out.add("converged", result.converged);
    out.add("iterations", static_cast<long long>(result.iterations));
    out.add("n", static_cast<long long>(data.size()));
    write(std::cout, out, opts->format.format());
  });
}

}  // namespace weibullr::cli
