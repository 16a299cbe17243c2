#include "swell/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace swell {

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

namespace {

std::string csv_cell(const Cell& cell, int digits) {
  struct Visitor {
    int digits;
    std::string operator()(double v) const { return std::isfinite(v) ? format_number(v, digits) : ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{digits}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell, int digits) {
  struct Visitor {
    int digits;
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      // Round through the text form so the emitted digits follow --digits.
      return std::strtod(format_number(v, digits).c_str(), nullptr);
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{digits}, cell);
}

void check_shape(const Table& table) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("table row width does not match header");
  }
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, int digits) {
  check_shape(table);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << csv_cell(row[c], digits);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, int digits) {
  check_shape(table);
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_cell(row[c], digits);
    doc.push_back(std::move(obj));
  }
  out << doc.dump(1) << '\n';
}

void write_table(std::ostream& out, const Table& table, Format format, int digits) {
  if (format == Format::csv) {
    write_csv(out, table, digits);
  } else {
    write_json(out, table, digits);
  }
}

}  // namespace swell
