#include "hetknn/matrix.hpp"

#include <algorithm>
#include <string>

#include "hetknn/errors.hpp"

namespace hetknn {

namespace {

std::vector<std::string> default_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

}  // namespace

DataMatrix::DataMatrix(std::vector<ColumnKind> schema, std::vector<std::string> column_names,
                       const std::vector<std::vector<CellValue>>& rows)
    : rows_(rows.size()), schema_(std::move(schema)), names_(std::move(column_names)) {
  if (schema_.empty()) throw ContractViolation("matrix needs at least one column");
  if (rows_ == 0) throw ContractViolation("matrix needs at least one row");
  if (names_.size() != schema_.size()) {
    throw ContractViolation("expected " + std::to_string(schema_.size()) + " column names, got " +
                            std::to_string(names_.size()));
  }
  cells_.reserve(rows_ * schema_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != schema_.size()) {
      throw ContractViolation("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " cells, expected " + std::to_string(schema_.size()));
    }
    cells_.insert(cells_.end(), rows[r].begin(), rows[r].end());
  }
}

DataMatrix::DataMatrix(std::vector<ColumnKind> schema, const std::vector<std::vector<CellValue>>& rows)
    : DataMatrix(schema, default_names(schema.size()), rows) {}

std::size_t DataMatrix::index(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= schema_.size()) {
    throw ContractViolation("cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside " + std::to_string(rows_) + "x" +
                            std::to_string(schema_.size()) + " matrix");
  }
  return row * schema_.size() + col;
}

const CellValue& DataMatrix::at(std::size_t row, std::size_t col) const {
  return cells_[index(row, col)];
}

void DataMatrix::set(CellRef ref, CellValue value) { cells_[index(ref.row, ref.col)] = std::move(value); }

std::vector<Violation> validate(const DataMatrix& matrix) {
  std::vector<Violation> out;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const CellValue& cell = matrix.at(r, c);
      if (is_missing(cell)) continue;
      const ColumnKind expected = matrix.kind(c);
      const ColumnKind found = *kind_of(cell);
      if (found != expected) {
        out.push_back({{r, c},
                       "kind mismatch: expected " + std::string(to_string(expected)) + ", found " +
                           std::string(to_string(found))});
        continue;
      }
      if (auto defect = cell_defect(cell)) out.push_back({{r, c}, *defect});
    }
  }
  return out;
}

void require_valid(const DataMatrix& matrix) {
  const auto violations = validate(matrix);
  if (violations.empty()) return;
  const auto& v = violations.front();
  throw ContractViolation("invalid matrix: " + v.message + " at (" + std::to_string(v.where.row) + "," +
                          std::to_string(v.where.col) + ")");
}

std::vector<CellRef> missing_cells(const DataMatrix& matrix) {
  std::vector<CellRef> out;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (is_missing(matrix.at(r, c))) out.push_back({r, c});
    }
  }
  return out;
}

bool is_complete(const DataMatrix& matrix) noexcept {
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (is_missing(matrix.at(r, c))) return false;
    }
  }
  return true;
}

}  // namespace hetknn
