#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace swell {

using Cell = std::variant<double, long long, bool, std::string>;

/// Column-oriented dataset written as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

/// Shortest of fixed/scientific notation with `digits` significant digits
/// ("%.*g"); "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value, int digits);

/// Header line plus one line per row, LF terminated. Non-finite numbers
/// are left empty.
void write_csv(std::ostream& out, const Table& table, int digits);

/// Array of objects keyed by column name; non-finite numbers become null.
void write_json(std::ostream& out, const Table& table, int digits);

void write_table(std::ostream& out, const Table& table, Format format, int digits);

}  // namespace swell
