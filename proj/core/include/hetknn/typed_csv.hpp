#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hetknn/matrix.hpp"

/// Typed CSV: the on-disk form of a DataMatrix.
///
///   header   name:kind,...        kind in {crisp, interval, fuzzy}
///   crisp    0.5891
///   interval [0.31623;0.94868]
///   fuzzy    (0.455842;0.569803;0.683763)
///   missing  empty field or NaN (any case)
///
/// Fields are comma-separated with no quoting; whitespace around fields and
/// components is ignored. Lines end in LF (CRLF accepted on input).
namespace hetknn::typed_csv {

enum class ParseMode {
  Strict,   // ordering violations (lower > upper, a1 > a2, ...) are parse errors
  Lenient,  // ordering is left for validate() to report
};

/// Throws ParseError with 1-based row/column on malformed input. In Strict
/// mode the returned matrix always passes validate().
DataMatrix parse(std::string_view text, ParseMode mode = ParseMode::Strict);

/// Canonical form: no padding, Missing as an empty field, shortest
/// round-trip real formatting, LF line endings. parse(serialize(m)) == m
/// bit-for-bit for every valid m. Column names must be non-empty, unpadded,
/// and free of commas and line breaks (ContractViolation otherwise).
std::string serialize(const DataMatrix& matrix);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

/// Cell text as it appears in a typed-CSV field.
std::string format_cell(const CellValue& cell);

/// File helpers; I/O failures throw std::runtime_error.
DataMatrix read_file(const std::filesystem::path& path, ParseMode mode = ParseMode::Strict);
void write_file(const std::filesystem::path& path, const DataMatrix& matrix);

}  // namespace hetknn::typed_csv
