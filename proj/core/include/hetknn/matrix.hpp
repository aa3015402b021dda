#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hetknn/cell.hpp"

namespace hetknn {

/// Zero-based address of a cell.
struct CellRef {
  std::size_t row{};
  std::size_t col{};
  auto operator<=>(const CellRef&) const = default;
};

/// Rectangular n x m grid of cells with a declared kind per column.
///
/// Shape is enforced on construction (n >= 1, m >= 1, every row has m cells,
/// one name and one kind per column). Cell contents are not: use validate()
/// to find kind mismatches and malformed values. Every algorithm in the
/// library validates its input before use.
class DataMatrix {
 public:
  DataMatrix(std::vector<ColumnKind> schema, std::vector<std::string> column_names,
             const std::vector<std::vector<CellValue>>& rows);

  /// Names default to c1..cm.
  DataMatrix(std::vector<ColumnKind> schema, const std::vector<std::vector<CellValue>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return schema_.size(); }
  std::size_t size() const noexcept { return cells_.size(); }

  const std::vector<ColumnKind>& schema() const noexcept { return schema_; }
  ColumnKind kind(std::size_t col) const { return schema_.at(col); }
  const std::vector<std::string>& column_names() const noexcept { return names_; }

  /// Bounds-checked; throws ContractViolation.
  const CellValue& at(std::size_t row, std::size_t col) const;
  const CellValue& at(CellRef ref) const { return at(ref.row, ref.col); }

  /// Bounds-checked; does not check the value against the schema.
  void set(CellRef ref, CellValue value);

  bool operator==(const DataMatrix&) const = default;

 private:
  std::size_t index(std::size_t row, std::size_t col) const;

  std::size_t rows_;
  std::vector<ColumnKind> schema_;
  std::vector<std::string> names_;
  std::vector<CellValue> cells_;  // row-major
};

struct Violation {
  CellRef where;
  std::string message;
  bool operator==(const Violation&) const = default;
};

/// One entry per invariant violation, row-major; empty for a valid matrix.
std::vector<Violation> validate(const DataMatrix& matrix);

/// Throws ContractViolation carrying the first violation, if any.
void require_valid(const DataMatrix& matrix);

/// Row-major list of Missing cells.
std::vector<CellRef> missing_cells(const DataMatrix& matrix);

bool is_complete(const DataMatrix& matrix) noexcept;

}  // namespace hetknn
