#include "input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace weibullr::cli {
namespace {

bool to_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  if (!to_double(text, v)) throw UsageError(what + ": '" + text + "' is not a number");
  return v;
}

std::vector<double> read_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.find(',') != std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected a single column");
    }
    double v = 0.0;
    if (to_double(line, v)) {
      values.push_back(v);
    } else if (seen_content) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": '" + line + "' is not a number");
    }
    seen_content = true;
  }
  if (values.empty()) throw UsageError("input file '" + path + "' holds no data");
  return values;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("grid must look like lo:hi:n, got '" + text + "'");
  const double lo = parse_double(text.substr(0, a), "grid lo");
  const double hi = parse_double(text.substr(a + 1, b - a - 1), "grid hi");
  const double count = parse_double(text.substr(b + 1), "grid n");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw UsageError("grid bounds must be finite");
  if (count != std::floor(count) || count < 1 || count > 1e7) {
    throw UsageError("grid n must be an integer in [1, 1e7]");
  }
  const auto n = static_cast<long>(count);
  if (n == 1) {
    if (lo != hi) throw UsageError("a one-point grid needs lo == hi");
    return {lo};
  }
  if (!(lo < hi)) throw UsageError("grid needs lo < hi, got '" + text + "'");
  std::vector<double> xs(n);
  for (long i = 0; i < n; ++i) xs[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return xs;
}

}  // namespace weibullr::cli
