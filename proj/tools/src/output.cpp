#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace weibullr::cli {
namespace {

// JSON has no inf or NaN; those go out as strings.
nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

std::string csv_scalar(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else return v;
      },
      s);
}

nlohmann::ordered_json json_scalar(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return json_number(v);
        else return v;
      },
      s);
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write(std::ostream& out, const Table& table, Format format) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row) r.push_back(json_number(v));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
}

void write(std::ostream& out, const Scalars& scalars, Format format) {
  if (format == Format::csv) {
    for (const auto& [name, value] : scalars.items) out << name << ',' << csv_scalar(value) << '\n';
    return;
  }
  auto doc = nlohmann::ordered_json::object();
  for (const auto& [name, value] : scalars.items) doc[name] = json_scalar(value);
  out << doc.dump() << '\n';
}

}  // namespace weibullr::cli
