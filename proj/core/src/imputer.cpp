#include "hetknn/imputer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hetknn/distances.hpp"
#include "hetknn/errors.hpp"

namespace hetknn {

std::vector<double> neighbor_weights(std::span<const double> distances) {
  if (distances.empty()) throw ContractViolation("neighbor_weights: no distances");
  std::size_t zero_count = 0;
  for (double d : distances) {
    if (!std::isfinite(d) || d < 0.0) {
      throw ContractViolation("neighbor_weights: distance must be finite and non-negative");
    }
    if (d < kZeroDistance) ++zero_count;
  }

  std::vector<double> weights(distances.size(), 0.0);
  if (zero_count > 0) {
    const double share = 1.0 / static_cast<double>(zero_count);
    for (std::size_t v = 0; v < distances.size(); ++v) {
      if (distances[v] < kZeroDistance) weights[v] = share;
    }
    return weights;
  }

  double total = 0.0;
  for (double d : distances) total += 1.0 / d;
  for (std::size_t v = 0; v < distances.size(); ++v) weights[v] = (1.0 / distances[v]) / total;
  return weights;
}

namespace {

template <typename T>
const T& donor_as(const CellValue& cell, ColumnKind kind) {
  if (const T* value = std::get_if<T>(&cell)) return *value;
  throw ContractViolation("combine_cells: donor does not match " + std::string(to_string(kind)) +
                          " column");
}

// Unchecked core of find_neighbors; `matrix` is already validated.
NeighborSet nearest_donors(const DataMatrix& matrix, CellRef target, std::size_t k) {
  struct Candidate {
    double distance;
    std::size_t row;
  };
  std::vector<Candidate> candidates;
  for (std::size_t j = 0; j < matrix.rows(); ++j) {
    if (j == target.row || is_missing(matrix.at(j, target.col))) continue;
    if (auto d = row_distance(matrix, target.row, j)) candidates.push_back({d->value, j});
  }

  const std::size_t take = std::min(k, candidates.size());
  const auto closer = [](const Candidate& a, const Candidate& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.row < b.row;
  };
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                    candidates.end(), closer);
  candidates.resize(take);

  NeighborSet result{target, {}};
  if (candidates.empty()) return result;

  std::vector<double> distances;
  distances.reserve(take);
  for (const auto& c : candidates) distances.push_back(c.distance);
  const auto weights = neighbor_weights(distances);
  result.donors.reserve(take);
  for (std::size_t v = 0; v < take; ++v) {
    result.donors.push_back({candidates[v].row, candidates[v].distance, weights[v]});
  }
  return result;
}

void check_target(const DataMatrix& matrix, CellRef target, std::size_t k) {
  if (k == 0) throw ContractViolation("k must be at least 1");
  if (!is_missing(matrix.at(target))) {
    throw ContractViolation("find_neighbors: target (" + std::to_string(target.row) + "," +
                            std::to_string(target.col) + ") is not Missing");
  }
}

}  // namespace

CellValue combine_cells(std::span<const WeightedCell> donors, ColumnKind kind) {
  if (donors.empty()) throw ContractViolation("combine_cells: no donors");
  double total = 0.0;
  for (const auto& d : donors) {
    if (!std::isfinite(d.weight) || d.weight < 0.0) {
      throw ContractViolation("combine_cells: weights must be finite and non-negative");
    }
    total += d.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ContractViolation("combine_cells: weights must sum to 1");

  // A convex combination of one repeated cell is that cell; the weighted sum
  // below would only reproduce it up to rounding (e.g. ten weights of 0.1).
  const WeightedCell* first = nullptr;
  bool uniform = true;
  for (const auto& d : donors) {
    if (d.weight == 0.0) continue;
    if (first == nullptr) {
      first = &d;
    } else if (!(d.value == first->value)) {
      uniform = false;
      break;
    }
  }
  if (uniform && first != nullptr && kind_of(first->value) == kind) return first->value;

  switch (kind) {
    case ColumnKind::Crisp: {
      double value = 0.0;
      for (const auto& d : donors) value += d.weight * donor_as<Crisp>(d.value, kind).value;
      return Crisp{value};
    }
    case ColumnKind::Interval: {
      Interval out{0.0, 0.0};
      for (const auto& d : donors) {
        const auto& iv = donor_as<Interval>(d.value, kind);
        out.lower += d.weight * iv.lower;
        out.upper += d.weight * iv.upper;
      }
      return out;
    }
    case ColumnKind::Fuzzy: {
      TriangularFuzzy out{0.0, 0.0, 0.0};
      for (const auto& d : donors) {
        const auto& t = donor_as<TriangularFuzzy>(d.value, kind);
        out.a1 += d.weight * t.a1;
        out.a2 += d.weight * t.a2;
        out.a3 += d.weight * t.a3;
      }
      return out;
    }
  }
  throw ContractViolation("combine_cells: unknown column kind");
}

NeighborSet find_neighbors(const DataMatrix& matrix, CellRef target, std::size_t k) {
  require_valid(matrix);
  check_target(matrix, target, k);
  return nearest_donors(matrix, target, k);
}

ImputationResult impute(const DataMatrix& matrix, std::size_t k) {
  if (k == 0) throw ContractViolation("k must be at least 1");
  require_valid(matrix);

  ImputationResult result{matrix, {}, {}};
  for (const CellRef target : missing_cells(matrix)) {
    NeighborSet neighbors = nearest_donors(matrix, target, k);
    if (neighbors.donors.empty()) {
      result.unimputable.push_back(target);
      continue;
    }
    std::vector<WeightedCell> weighted;
    weighted.reserve(neighbors.donors.size());
    for (const auto& donor : neighbors.donors) {
      weighted.push_back({matrix.at(donor.row, target.col), donor.weight});
    }
    result.matrix.set(target, combine_cells(weighted, matrix.kind(target.col)));
    result.trace.emplace(target, std::move(neighbors));
  }
  return result;
}

}  // namespace hetknn
