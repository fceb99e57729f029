#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weibullr::cli {

/// Bad command-line usage or unreadable input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads one number per line. A non-numeric first line is taken as a header;
/// blank lines are skipped. More than one column is rejected.
std::vector<double> read_column(const std::string& path);

/// Parses "lo:hi:n" into n evenly spaced points (n >= 2, lo < hi; n = 1 with
/// lo == hi gives the single point).
std::vector<double> parse_grid(const std::string& text);

double parse_double(const std::string& text, const std::string& what);

}  // namespace weibullr::cli
