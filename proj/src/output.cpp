#include "expfam/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace expfam::out {

namespace {

std::string cell_text(const Cell& c, const char* missing) {
  return std::visit(
      [missing](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return missing;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      c);
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          // json has no inf/nan literals
          if (!std::isfinite(v)) return format_double(v);
          return v;
        } else {
          return v;
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (const char ch : s) {
    if (ch == '"') r += '"';
    r += ch;
  }
  return r + "\"";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "plain") return Format::Plain;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or plain)");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write(std::ostream& os, const Table& table, Format format) {
  switch (format) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_escape(table.columns[i]);
      }
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          os << (i ? "," : "") << csv_escape(cell_text(row[i], ""));
        }
        os << '\n';
      }
      break;
    }
    case Format::Plain: {
      std::vector<std::vector<std::string>> text;
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows) {
        auto& line = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          line.push_back(cell_text(row[i], "-"));
          width[i] = std::max(width[i], line.back().size());
        }
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) os << "  ";
          os << cells[i];
          if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
        }
        os << '\n';
      };
      emit(table.columns);
      for (const auto& line : text) emit(line);
      break;
    }
  }
}

}  // namespace expfam::out
