#pragma once

// Seeded random inputs for property tests.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "hetknn/matrix.hpp"

namespace hetknn::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  Interval interval() {
    double a = unit(), b = unit();
    if (a > b) std::swap(a, b);
    return {a, b};
  }

  TriangularFuzzy fuzzy() {
    double v[3] = {unit(), unit(), unit()};
    std::sort(v, v + 3);
    return {v[0], v[1], v[2]};
  }

  ColumnKind kind() { return static_cast<ColumnKind>(index(3)); }

  CellValue cell(ColumnKind kind) {
    switch (kind) {
      case ColumnKind::Crisp:
        return Crisp{unit()};
      case ColumnKind::Interval:
        return interval();
      case ColumnKind::Fuzzy:
        return fuzzy();
    }
    return Missing{};
  }

  // Random schema and values in [0, 1]; each cell Missing with probability
  // `missing_rate`.
  DataMatrix matrix(std::size_t rows, std::size_t cols, double missing_rate) {
    std::vector<ColumnKind> schema;
    for (std::size_t c = 0; c < cols; ++c) schema.push_back(kind());
    std::vector<std::vector<CellValue>> cells(rows);
    for (auto& row : cells) {
      for (std::size_t c = 0; c < cols; ++c) {
        row.push_back(chance(missing_rate) ? CellValue{Missing{}} : cell(schema[c]));
      }
    }
    return DataMatrix(schema, cells);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hetknn::testing
