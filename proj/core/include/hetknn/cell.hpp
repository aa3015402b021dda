#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hetknn {

/// The single data kind a column carries.
enum class ColumnKind { Crisp, Interval, Fuzzy };

/// Lower-case tag used in typed-CSV headers: "crisp", "interval", "fuzzy".
std::string_view to_string(ColumnKind kind) noexcept;
std::optional<ColumnKind> parse_column_kind(std::string_view tag) noexcept;

struct Missing {
  bool operator==(const Missing&) const = default;
};

struct Crisp {
  double value{};
  bool operator==(const Crisp&) const = default;
};

/// Closed interval [lower, upper]. Degenerate intervals are legal.
struct Interval {
  double lower{};
  double upper{};
  bool operator==(const Interval&) const = default;
};

/// Triangular fuzzy number (a1, a2, a3) with a1 <= a2 <= a3; a2 is the peak.
struct TriangularFuzzy {
  double a1{};
  double a2{};
  double a3{};
  bool operator==(const TriangularFuzzy&) const = default;
};

using CellValue = std::variant<Missing, Crisp, Interval, TriangularFuzzy>;

inline bool is_missing(const CellValue& cell) noexcept {
  return std::holds_alternative<Missing>(cell);
}

/// Kind of a non-Missing cell; std::nullopt for Missing.
std::optional<ColumnKind> kind_of(const CellValue& cell) noexcept;

/// Describes why a cell is malformed (non-finite component, broken ordering),
/// or std::nullopt when the cell is well formed. Missing is well formed.
std::optional<std::string> cell_defect(const CellValue& cell);

// Checked constructors; throw ContractViolation on ordering or finiteness
// violations.
Interval make_interval(double lower, double upper);
TriangularFuzzy make_fuzzy(double a1, double a2, double a3);

}  // namespace hetknn
