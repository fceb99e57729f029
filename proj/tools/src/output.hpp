#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace weibullr::cli {

enum class Format { csv, json };

/// Columns of numbers, written as a CSV table with a header row or as
/// {"columns": [...], "rows": [[...], ...]}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

using Scalar = std::variant<double, long long, bool, std::string>;

/// Named results, written as `name,value` rows or as one JSON object.
struct Scalars {
  std::vector<std::pair<std::string, Scalar>> items;

  void add(std::string name, Scalar value) { items.emplace_back(std::move(name), std::move(value)); }
};

/// %.17g, so that parsing the text gives back the same double.
std::string format_number(double v);

void write(std::ostream& out, const Table& table, Format format);
void write(std::ostream& out, const Scalars& scalars, Format format);

}  // namespace weibullr::cli
