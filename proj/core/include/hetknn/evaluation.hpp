#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hetknn/cell.hpp"
#include "hetknn/matrix.hpp"

namespace hetknn {

/// How masked cells are placed.
enum class MaskMode {
  OnePerRow,   // distinct rows, uniform column per row (default protocol)
  SameColumn,  // one uniformly chosen column, distinct rows
};

struct MaskPattern {
  std::vector<CellRef> refs;  // row-major
  std::uint64_t seed{};
  bool operator==(const MaskPattern&) const = default;
};

struct MaskedMatrix {
  DataMatrix matrix;
  MaskPattern pattern;
};

/// Replaces `count` cells of a complete matrix by Missing, never two in one
/// row. Deterministic in (matrix shape, count, seed, mode) on every platform.
/// Throws ContractViolation if count > rows or the matrix has Missing cells.
MaskedMatrix mask_random(const DataMatrix& matrix, std::size_t count, std::uint64_t seed,
                         MaskMode mode = MaskMode::OnePerRow);

/// Type-dispatched distance between a true and an imputed cell.
double cell_error(const CellValue& original, const CellValue& imputed, ColumnKind kind);

/// Mean cell_error over all n*m cells. Both matrices must be complete and
/// share shape and schema.
double matrix_error(const DataMatrix& original, const DataMatrix& imputed);

/// Box-plot statistics. Quartiles interpolate linearly between order
/// statistics (position p * (n - 1)).
struct BoxSummary {
  std::size_t count{};
  double min{};
  double q1{};
  double median{};
  double q3{};
  double max{};
  double mean{};
  bool operator==(const BoxSummary&) const = default;
};

/// Throws ContractViolation on an empty sample.
BoxSummary summarize(std::span<const double> samples);

/// Linear-interpolation quantile of an ascending-sorted sample, p in [0, 1].
double sorted_quantile(std::span<const double> sorted, double p);

struct SweepKey {
  std::size_t k{};
  std::size_t missing_count{};
  auto operator<=>(const SweepKey&) const = default;
};

struct TrialOutcome {
  std::size_t trial{};
  std::uint64_t seed{};
  std::optional<double> error;  // nullopt when some masked cell was unimputable
  bool operator==(const TrialOutcome&) const = default;
};

struct BenchmarkConfig {
  std::vector<std::size_t> k_values;
  std::vector<std::size_t> missing_counts;
  std::size_t trials{1};
  std::uint64_t seed{};
  MaskMode mask_mode{MaskMode::OnePerRow};
  unsigned threads{1};  // results do not depend on this
};

struct BenchmarkReport {
  std::string dataset_name;
  std::map<SweepKey, std::vector<TrialOutcome>> samples;  // trials in order
  std::map<SweepKey, BoxSummary> summaries;               // imputable trials only
  std::map<std::size_t, BoxSummary> per_k;                // pooled over missing counts
  std::size_t unimputable_trials{};
  bool operator==(const BenchmarkReport&) const = default;
};

/// Seed of one trial, mixed from the run seed and the trial coordinates.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t k, std::size_t missing_count,
                         std::size_t trial) noexcept;

/// Mask / impute / score sweep over every (k, missing count, trial).
/// Trials leaving any masked cell unimputable are kept in `samples` with no
/// error, counted in `unimputable_trials`, and left out of the summaries.
BenchmarkReport benchmark(const DataMatrix& matrix, const BenchmarkConfig& config,
                          std::string dataset_name = {});

}  // namespace hetknn
