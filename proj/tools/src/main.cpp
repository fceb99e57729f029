#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "input.hpp"
#include "weibullr/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weibull-R distribution toolkit"};
  app.set_version_flag("--version", "weibullr 0.1.0");
  app.require_subcommand(1);
  weibullr::cli::register_eval(app);
  weibullr::cli::register_sample(app);
  weibullr::cli::register_plotdata(app);
  weibullr::cli::register_moments(app);
  weibullr::cli::register_entropy(app);
  weibullr::cli::register_reliability(app);
  weibullr::cli::register_records(app);
  weibullr::cli::register_fit(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  } catch (const weibullr::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const weibullr::Error& e) {
    // ParameterError and DomainError: the request itself is invalid.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const weibullr::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
