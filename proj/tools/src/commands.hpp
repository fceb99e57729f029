#pragma once

#include <CLI11.hpp>

namespace weibullr::cli {

void register_eval(CLI::App& app);
void register_sample(CLI::App& app);
void register_plotdata(CLI::App& app);
void register_moments(CLI::App& app);
void register_entropy(CLI::App& app);
void register_reliability(CLI::App& app);
void register_records(CLI::App& app);
void register_fit(CLI::App& app);

}  // namespace weibullr::cli
