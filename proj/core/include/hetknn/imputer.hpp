#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hetknn/cell.hpp"
#include "hetknn/matrix.hpp"

namespace hetknn {

/// Distances below this are treated as exact matches when weighting donors.
inline constexpr double kZeroDistance = 1e-12;

struct Donor {
  std::size_t row{};
  double distance{};
  double weight{};
  bool operator==(const Donor&) const = default;
};

/// The donors chosen for one missing cell, nearest first (ties by row index).
/// Weights sum to one; empty when no candidate row is comparable.
struct NeighborSet {
  CellRef target;
  std::vector<Donor> donors;
  bool operator==(const NeighborSet&) const = default;
};

struct WeightedCell {
  CellValue value;
  double weight{};
};

struct ImputationResult {
  DataMatrix matrix;
  std::map<CellRef, NeighborSet> trace;
  std::vector<CellRef> unimputable;  // row-major; still Missing in `matrix`
};

/// Normalized inverse-distance weights. If any distance is below
/// kZeroDistance, those donors split the weight evenly and the rest get 0.
/// Throws ContractViolation on empty input or negative / non-finite values.
std::vector<double> neighbor_weights(std::span<const double> distances);

/// Convex combination of donor cells, component-wise for intervals and fuzzy
/// numbers. Weights must be non-negative and sum to 1 (within 1e-9). When all
/// positively weighted donors hold the same cell, that cell is returned
/// exactly.
CellValue combine_cells(std::span<const WeightedCell> donors, ColumnKind kind);

/// Candidates are rows observed at target.col with a defined row distance to
/// target.row. Returns the min(k, #candidates) nearest of them.
/// Throws ContractViolation when the target is not Missing, k == 0, or the
/// matrix is invalid.
NeighborSet find_neighbors(const DataMatrix& matrix, CellRef target, std::size_t k);

/// Imputes every Missing cell from the original matrix (values imputed in
/// this call never act as donors). The input is left untouched.
ImputationResult impute(const DataMatrix& matrix, std::size_t k);

}  // namespace hetknn
