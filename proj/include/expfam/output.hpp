#ifndef EXPFAM_OUTPUT_HPP
#define EXPFAM_OUTPUT_HPP

// Tabular output in json / csv / plain text. Numbers are written with the
// shortest decimal form that parses back to the same double.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace expfam::out {

enum class Format { Json, Csv, Plain };

/// Throws std::invalid_argument for anything but json, csv, plain.
Format parse_format(const std::string& name);

/// A missing value is std::monostate (json null, empty csv cell, "-" in plain).
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite.
std::string format_double(double v);

void write(std::ostream& os, const Table& table, Format format);

}  // namespace expfam::out

#endif  // EXPFAM_OUTPUT_HPP
