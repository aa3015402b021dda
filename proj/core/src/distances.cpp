#include "hetknn/distances.hpp"

#include <cmath>
#include <string>

#include "hetknn/errors.hpp"

namespace hetknn {

double crisp_distance(double a, double b) noexcept { return std::abs(a - b); }

double interval_distance(const Interval& a, const Interval& b) noexcept {
  const double dl = a.lower - b.lower;
  const double du = a.upper - b.upper;
  return 0.5 * std::sqrt(dl * dl + du * du);
}

double tfn_distance(const TriangularFuzzy& a, const TriangularFuzzy& b) noexcept {
  return (std::abs(a.a1 - b.a1) + std::abs(a.a2 - b.a2) + std::abs(a.a3 - b.a3)) / 3.0;
}

double tfn_membership(const TriangularFuzzy& t, double x) noexcept {
  if (x == t.a2) return 1.0;
  if (t.a1 < x && x < t.a2) return (x - t.a1) / (t.a2 - t.a1);
  if (t.a2 < x && x < t.a3) return (t.a3 - x) / (t.a3 - t.a2);
  return 0.0;
}

namespace {

template <typename T>
const T& expect(const CellValue& cell, ColumnKind kind) {
  if (const T* value = std::get_if<T>(&cell)) return *value;
  if (is_missing(cell)) throw ContractViolation("cell_distance: Missing operand");
  throw ContractViolation("cell_distance: " + std::string(to_string(*kind_of(cell))) +
                          " cell in " + std::string(to_string(kind)) + " column");
}

void check_rows(const DataMatrix& matrix, std::size_t i, std::size_t j) {
  if (i >= matrix.rows() || j >= matrix.rows()) {
    throw ContractViolation("row_distance: row index out of range (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") for " + std::to_string(matrix.rows()) + " rows");
  }
  if (i == j) throw ContractViolation("row_distance: rows must differ");
}

}  // namespace

double cell_distance(const CellValue& a, const CellValue& b, ColumnKind kind) {
  switch (kind) {
    case ColumnKind::Crisp:
      return crisp_distance(expect<Crisp>(a, kind).value, expect<Crisp>(b, kind).value);
    case ColumnKind::Interval:
      return interval_distance(expect<Interval>(a, kind), expect<Interval>(b, kind));
    case ColumnKind::Fuzzy:
      return tfn_distance(expect<TriangularFuzzy>(a, kind), expect<TriangularFuzzy>(b, kind));
  }
  throw ContractViolation("cell_distance: unknown column kind");
}

std::optional<RowDistance> row_distance(const DataMatrix& matrix, std::size_t i, std::size_t j) {
  check_rows(matrix, i, j);
  double sum = 0.0;
  std::size_t shared = 0;
  for (std::size_t l = 0; l < matrix.cols(); ++l) {
    const CellValue& a = matrix.at(i, l);
    const CellValue& b = matrix.at(j, l);
    if (is_missing(a) || is_missing(b)) continue;
    sum += cell_distance(a, b, matrix.kind(l));
    ++shared;
  }
  if (shared == 0) return std::nullopt;
  return RowDistance{std::sqrt(sum / static_cast<double>(shared)), shared};
}

std::vector<std::optional<double>> column_distances(const DataMatrix& matrix, std::size_t i,
                                                    std::size_t j) {
  check_rows(matrix, i, j);
  std::vector<std::optional<double>> out(matrix.cols());
  for (std::size_t l = 0; l < matrix.cols(); ++l) {
    const CellValue& a = matrix.at(i, l);
    const CellValue& b = matrix.at(j, l);
    if (!is_missing(a) && !is_missing(b)) out[l] = cell_distance(a, b, matrix.kind(l));
  }
  return out;
}

}  // namespace hetknn
