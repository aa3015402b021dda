#include <benchmark/benchmark.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "hetknn/distances.hpp"
#include "hetknn/evaluation.hpp"
#include "hetknn/fixtures.hpp"
#include "hetknn/imputer.hpp"

namespace {

using namespace hetknn;

// Mixed-kind matrix with a smooth row trend and a few gaps.
DataMatrix synthetic(std::size_t rows, double missing_rate, bool with_gaps = true) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> noise(-0.02, 0.02);
  std::bernoulli_distribution gap(missing_rate);
  std::vector<ColumnKind> schema{ColumnKind::Crisp, ColumnKind::Interval, ColumnKind::Fuzzy,
                                 ColumnKind::Crisp};
  std::vector<std::vector<CellValue>> cells;
  for (std::size_t r = 0; r < rows; ++r) {
    const double t = static_cast<double>(r) / static_cast<double>(rows);
    std::vector<CellValue> row{
        Crisp{t + noise(rng)},
        Interval{t, t + 0.1 + std::abs(noise(rng))},
        TriangularFuzzy{t, t + 0.05, t + 0.1 + std::abs(noise(rng))},
        Crisp{std::sin(3.0 * t)},
    };
    if (with_gaps && r % 2 == 1 && gap(rng)) row[r % row.size()] = Missing{};
    cells.push_back(std::move(row));
  }
  return DataMatrix(schema, std::move(cells));
}

void BM_RowDistance(benchmark::State& state) {
  const DataMatrix m = synthetic(2, 0.0, false);
  for (auto _ : state) benchmark::DoNotOptimize(row_distance(m, 0, 1));
}
BENCHMARK(BM_RowDistance);

void BM_Impute(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const DataMatrix m = synthetic(rows, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(impute(m, 4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Impute)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CaseStudySweep(benchmark::State& state) {
  const DataMatrix m = fixture("case3");
  BenchmarkConfig config;
  config.k_values = {1, 2, 3, 4};
  config.missing_counts = {1, 2, 3, 4, 5};
  config.trials = 20;
  config.seed = 7;
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hetknn::benchmark(m, config, "case3"));
}
BENCHMARK(BM_CaseStudySweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
