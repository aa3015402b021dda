#include "hetknn/cell.hpp"

#include <cmath>

#include "hetknn/errors.hpp"

namespace hetknn {

ParseError::ParseError(std::size_t row, std::size_t column, const std::string& message)
    : std::runtime_error(message), row_(row), column_(column) {}

std::string_view to_string(ColumnKind kind) noexcept {
  switch (kind) {
    case ColumnKind::Crisp:
      return "crisp";
    case ColumnKind::Interval:
      return "interval";
    case ColumnKind::Fuzzy:
      return "fuzzy";
  }
  return "unknown";
}

std::optional<ColumnKind> parse_column_kind(std::string_view tag) noexcept {
  if (tag == "crisp") return ColumnKind::Crisp;
  if (tag == "interval") return ColumnKind::Interval;
  if (tag == "fuzzy") return ColumnKind::Fuzzy;
  return std::nullopt;
}

namespace {

struct KindVisitor {
  std::optional<ColumnKind> operator()(const Missing&) const { return std::nullopt; }
  std::optional<ColumnKind> operator()(const Crisp&) const { return ColumnKind::Crisp; }
  std::optional<ColumnKind> operator()(const Interval&) const { return ColumnKind::Interval; }
  std::optional<ColumnKind> operator()(const TriangularFuzzy&) const { return ColumnKind::Fuzzy; }
};

struct DefectVisitor {
  std::optional<std::string> operator()(const Missing&) const { return std::nullopt; }

  std::optional<std::string> operator()(const Crisp& c) const {
    if (!std::isfinite(c.value)) return "non-finite value";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const Interval& iv) const {
    if (!std::isfinite(iv.lower) || !std::isfinite(iv.upper)) return "non-finite interval bound";
    if (iv.lower > iv.upper) return "lower > upper";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const TriangularFuzzy& t) const {
    if (!std::isfinite(t.a1) || !std::isfinite(t.a2) || !std::isfinite(t.a3)) {
      return "non-finite fuzzy component";
    }
    if (t.a1 > t.a2) return "a1 > a2";
    if (t.a2 > t.a3) return "a2 > a3";
    return std::nullopt;
  }
};

}  // namespace

std::optional<ColumnKind> kind_of(const CellValue& cell) noexcept {
  return std::visit(KindVisitor{}, cell);
}

std::optional<std::string> cell_defect(const CellValue& cell) {
  return std::visit(DefectVisitor{}, cell);
}

Interval make_interval(double lower, double upper) {
  Interval iv{lower, upper};
  if (auto defect = DefectVisitor{}(iv)) throw ContractViolation("invalid interval: " + *defect);
  return iv;
}

TriangularFuzzy make_fuzzy(double a1, double a2, double a3) {
  TriangularFuzzy t{a1, a2, a3};
  if (auto defect = DefectVisitor{}(t)) throw ContractViolation("invalid fuzzy number: " + *defect);
  return t;
}

}  // namespace hetknn
