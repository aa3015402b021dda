#include "hetknn/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "hetknn/distances.hpp"
#include "hetknn/errors.hpp"
#include "hetknn/imputer.hpp"

namespace hetknn {

namespace {

// std::uniform_int_distribution is implementation-defined; this is not.
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x < limit) return x % bound;
  }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// First `count` entries of a seeded partial Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> pick_rows(std::mt19937_64& engine, std::size_t n, std::size_t count) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(draw_below(engine, n - i));
    std::swap(rows[i], rows[j]);
  }
  rows.resize(count);
  return rows;
}

}  // namespace

MaskedMatrix mask_random(const DataMatrix& matrix, std::size_t count, std::uint64_t seed,
                         MaskMode mode) {
  if (count > matrix.rows()) {
    throw ContractViolation("mask_random: cannot mask " + std::to_string(count) + " cells in " +
                            std::to_string(matrix.rows()) + " rows");
  }
  if (!is_complete(matrix)) throw ContractViolation("mask_random: matrix already has Missing cells");

  std::mt19937_64 engine(seed);
  MaskPattern pattern{{}, seed};
  if (count > 0) {
    if (mode == MaskMode::OnePerRow) {
      for (std::size_t row : pick_rows(engine, matrix.rows(), count)) {
        pattern.refs.push_back({row, static_cast<std::size_t>(draw_below(engine, matrix.cols()))});
      }
    } else {
      const auto col = static_cast<std::size_t>(draw_below(engine, matrix.cols()));
      for (std::size_t row : pick_rows(engine, matrix.rows(), count)) pattern.refs.push_back({row, col});
    }
  }
  std::sort(pattern.refs.begin(), pattern.refs.end());

  MaskedMatrix out{matrix, std::move(pattern)};
  for (const CellRef ref : out.pattern.refs) out.matrix.set(ref, Missing{});
  return out;
}

double cell_error(const CellValue& original, const CellValue& imputed, ColumnKind kind) {
  return cell_distance(original, imputed, kind);
}

double matrix_error(const DataMatrix& original, const DataMatrix& imputed) {
  if (original.rows() != imputed.rows() || original.cols() != imputed.cols()) {
    throw ContractViolation("matrix_error: shape mismatch");
  }
  if (original.schema() != imputed.schema()) throw ContractViolation("matrix_error: schema mismatch");
  double total = 0.0;
  for (std::size_t r = 0; r < original.rows(); ++r) {
    for (std::size_t c = 0; c < original.cols(); ++c) {
      total += cell_error(original.at(r, c), imputed.at(r, c), original.kind(c));
    }
  }
  return total / static_cast<double>(original.size());
}

double sorted_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw ContractViolation("sorted_quantile: empty sample");
  const double position = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(position));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = position - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxSummary summarize(std::span<const double> samples) {
  if (samples.empty()) throw ContractViolation("summarize: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  BoxSummary s;
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  s.q1 = sorted_quantile(sorted, 0.25);
  s.median = sorted_quantile(sorted, 0.5);
  s.q3 = sorted_quantile(sorted, 0.75);
  // Sum in sorted order so the mean does not depend on trial order.
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  return s;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t k, std::size_t missing_count,
                         std::size_t trial) noexcept {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  h = splitmix64(h ^ static_cast<std::uint64_t>(missing_count));
  h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

BenchmarkReport benchmark(const DataMatrix& matrix, const BenchmarkConfig& config,
                          std::string dataset_name) {
  require_valid(matrix);
  if (!is_complete(matrix)) throw ContractViolation("benchmark: matrix must be complete");
  if (config.trials == 0) throw ContractViolation("benchmark: trials must be at least 1");
  for (std::size_t k : config.k_values) {
    if (k == 0) throw ContractViolation("benchmark: k must be at least 1");
  }
  for (std::size_t count : config.missing_counts) {
    if (count > matrix.rows()) {
      throw ContractViolation("benchmark: missing count " + std::to_string(count) + " exceeds " +
                              std::to_string(matrix.rows()) + " rows");
    }
  }

  auto k_values = config.k_values;
  auto counts = config.missing_counts;
  for (auto* values : {&k_values, &counts}) {
    std::sort(values->begin(), values->end());
    values->erase(std::unique(values->begin(), values->end()), values->end());
  }

  struct Job {
    SweepKey key;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t k : k_values) {
    for (std::size_t count : counts) {
      for (std::size_t t = 0; t < config.trials; ++t) jobs.push_back({{k, count}, t});
    }
  }

  std::vector<TrialOutcome> outcomes(jobs.size());
  auto run_job = [&](std::size_t index) {
    const Job& job = jobs[index];
    const std::uint64_t seed = trial_seed(config.seed, job.key.k, job.key.missing_count, job.trial);
    MaskedMatrix masked = mask_random(matrix, job.key.missing_count, seed, config.mask_mode);
    ImputationResult imputed = impute(masked.matrix, job.key.k);
    TrialOutcome outcome{job.trial, seed, std::nullopt};
    if (imputed.unimputable.empty()) outcome.error = matrix_error(matrix, imputed.matrix);
    outcomes[index] = outcome;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) run_job(i);
      });
    }
  }

  BenchmarkReport report;
  report.dataset_name = std::move(dataset_name);
  std::map<std::size_t, std::vector<double>> pooled;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    report.samples[jobs[i].key].push_back(outcomes[i]);
  }
  for (const auto& [key, trials] : report.samples) {
    std::vector<double> errors;
    for (const auto& t : trials) {
      if (t.error) {
        errors.push_back(*t.error);
      } else {
        ++report.unimputable_trials;
      }
    }
    if (errors.empty()) continue;
    report.summaries.emplace(key, summarize(errors));
    auto& bucket = pooled[key.k];
    bucket.insert(bucket.end(), errors.begin(), errors.end());
  }
  for (const auto& [k, errors] : pooled) report.per_k.emplace(k, summarize(errors));
  return report;
}

}  // namespace hetknn
