#include "hetknn/typed_csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hetknn/errors.hpp"

namespace hetknn::typed_csv {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_nan_literal(std::string_view s) {
  return s.size() == 3 && (s[0] == 'n' || s[0] == 'N') && (s[1] == 'a' || s[1] == 'A') &&
         (s[2] == 'n' || s[2] == 'N');
}

[[noreturn]] void fail(std::size_t row, std::size_t column, const std::string& message) {
  std::string where;
  if (row == 0) {
    where = column == 0 ? "header" : "header, column " + std::to_string(column);
  } else {
    where = "row " + std::to_string(row);
    if (column != 0) where += ", column " + std::to_string(column);
  }
  throw ParseError(row, column, where + ": " + message);
}

class FieldParser {
 public:
  FieldParser(std::size_t row, std::size_t column, ParseMode mode)
      : row_(row), column_(column), strict_(mode == ParseMode::Strict) {}

  CellValue parse(std::string_view field, ColumnKind kind) const {
    switch (kind) {
      case ColumnKind::Crisp:
        if (!field.empty() && (field.front() == '[' || field.front() == '(')) {
          fail(row_, column_, "expected crisp value, found '" + std::string(field) + "'");
        }
        return Crisp{real(field)};
      case ColumnKind::Interval: {
        const auto parts = components(field, '[', ']', 2, "interval value [lower;upper]");
        const Interval iv{real(parts[0]), real(parts[1])};
        if (strict_ && iv.lower > iv.upper) fail(row_, column_, "lower > upper in '" + std::string(field) + "'");
        return iv;
      }
      case ColumnKind::Fuzzy: {
        const auto parts = components(field, '(', ')', 3, "fuzzy value (a1;a2;a3)");
        const TriangularFuzzy t{real(parts[0]), real(parts[1]), real(parts[2])};
        if (strict_ && (t.a1 > t.a2 || t.a2 > t.a3)) {
          fail(row_, column_, "fuzzy components out of order in '" + std::string(field) + "'");
        }
        return t;
      }
    }
    fail(row_, column_, "unknown column kind");
  }

 private:
  std::vector<std::string_view> components(std::string_view field, char open, char close,
                                           std::size_t arity, const char* expected) const {
    if (field.size() < 2 || field.front() != open || field.back() != close) {
      fail(row_, column_, std::string("expected ") + expected + ", found '" + std::string(field) + "'");
    }
    auto parts = split(field.substr(1, field.size() - 2), ';');
    if (parts.size() != arity) {
      fail(row_, column_, std::string("expected ") + expected + ", found '" + std::string(field) + "'");
    }
    return parts;
  }

  double real(std::string_view text) const {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      fail(row_, column_, "malformed number '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) fail(row_, column_, "non-finite number '" + std::string(text) + "'");
    return value;
  }

  std::size_t row_;
  std::size_t column_;
  bool strict_;
};

}  // namespace

DataMatrix parse(std::string_view text, ParseMode mode) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  if (lines.empty() || trim(lines.front()).empty()) fail(0, 0, "missing header");

  std::vector<ColumnKind> schema;
  std::vector<std::string> names;
  const auto header = split(lines.front(), ',');
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string_view field = trim(header[c]);
    const auto colon = field.rfind(':');
    if (colon == std::string_view::npos) fail(0, c + 1, "expected name:kind, found '" + std::string(field) + "'");
    const std::string_view name = trim(field.substr(0, colon));
    const std::string_view tag = trim(field.substr(colon + 1));
    if (name.empty()) fail(0, c + 1, "empty column name");
    const auto kind = parse_column_kind(tag);
    if (!kind) {
      fail(0, c + 1, "unknown kind '" + std::string(tag) + "' (expected crisp, interval or fuzzy)");
    }
    names.emplace_back(name);
    schema.push_back(*kind);
  }

  const std::size_t m = schema.size();
  // A blank line is a legitimate all-Missing record in a one-column file, so
  // trailing blank lines are only dropped when there are several columns.
  if (m > 1) {
    while (lines.size() > 1 && trim(lines.back()).empty()) lines.pop_back();
  }
  if (lines.size() < 2) fail(0, 0, "no data rows");

  std::vector<std::vector<CellValue>> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split(lines[r], ',');
    if (fields.size() != m) {
      fail(r, 0, "expected " + std::to_string(m) + " fields, found " + std::to_string(fields.size()));
    }
    std::vector<CellValue> row;
    row.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
      const std::string_view field = trim(fields[c]);
      if (field.empty() || is_nan_literal(field)) {
        row.emplace_back(Missing{});
      } else {
        row.push_back(FieldParser(r, c + 1, mode).parse(field, schema[c]));
      }
    }
    rows.push_back(std::move(row));
  }
  return DataMatrix(std::move(schema), std::move(names), rows);
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf.data(), end);
}

std::string format_cell(const CellValue& cell) {
  if (const auto* c = std::get_if<Crisp>(&cell)) return format_real(c->value);
  if (const auto* iv = std::get_if<Interval>(&cell)) {
    return "[" + format_real(iv->lower) + ";" + format_real(iv->upper) + "]";
  }
  if (const auto* t = std::get_if<TriangularFuzzy>(&cell)) {
    return "(" + format_real(t->a1) + ";" + format_real(t->a2) + ";" + format_real(t->a3) + ")";
  }
  return {};
}

std::string serialize(const DataMatrix& matrix) {
  std::string out;
  for (std::size_t c = 0; c < matrix.cols(); ++c) {
    const std::string& name = matrix.column_names()[c];
    if (name.empty() || trim(name) != name || name.find_first_of(",\r\n") != std::string::npos) {
      throw ContractViolation("column name '" + name + "' cannot be written to typed CSV");
    }
    if (c > 0) out += ',';
    out += name;
    out += ':';
    out += to_string(matrix.kind(c));
  }
  out += '\n';
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_cell(matrix.at(r, c));
    }
    out += '\n';
  }
  return out;
}

DataMatrix read_file(const std::filesystem::path& path, ParseMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading " + path.string());
  return parse(buffer.str(), mode);
}

void write_file(const std::filesystem::path& path, const DataMatrix& matrix) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(matrix);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace hetknn::typed_csv
