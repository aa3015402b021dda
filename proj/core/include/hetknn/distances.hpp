#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hetknn/cell.hpp"
#include "hetknn/matrix.hpp"

namespace hetknn {

/// |a - b|.
double crisp_distance(double a, double b) noexcept;

/// Half the Euclidean distance between the endpoint pairs:
/// 0.5 * sqrt((aL - bL)^2 + (aU - bU)^2).
double interval_distance(const Interval& a, const Interval& b) noexcept;

/// Mean absolute component difference of two triangular fuzzy numbers.
double tfn_distance(const TriangularFuzzy& a, const TriangularFuzzy& b) noexcept;

/// Triangular membership degree of x. Returns 1 at the peak even when the
/// peak coincides with a1 or a3; 0 outside the open support.
double tfn_membership(const TriangularFuzzy& t, double x) noexcept;

/// Dispatches on `kind`. Throws ContractViolation for Missing operands or a
/// cell that does not match `kind`.
double cell_distance(const CellValue& a, const CellValue& b, ColumnKind kind);

/// Missingness-aware distance between two rows.
struct RowDistance {
  double value{};
  std::size_t shared_features{};  // columns observed in both rows
  bool operator==(const RowDistance&) const = default;
};

/// sqrt of the mean per-cell distance over the columns observed in both rows.
/// std::nullopt means the rows are incomparable (no shared observed column).
/// Throws ContractViolation for i == j or out-of-range rows. The matrix is
/// assumed valid.
std::optional<RowDistance> row_distance(const DataMatrix& matrix, std::size_t i, std::size_t j);

/// Per-column cell distances feeding row_distance; std::nullopt where either
/// side is Missing.
std::vector<std::optional<double>> column_distances(const DataMatrix& matrix, std::size_t i,
                                                    std::size_t j);

}  // namespace hetknn
