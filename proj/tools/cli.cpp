#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hetknn/distances.hpp"
#include "hetknn/errors.hpp"
#include "hetknn/evaluation.hpp"
#include "hetknn/fixtures.hpp"
#include "hetknn/imputer.hpp"
#include "hetknn/matrix.hpp"
#include "hetknn/typed_csv.hpp"

namespace hetknn::cli {

namespace {

namespace fs = std::filesystem;
using typed_csv::format_real;

// Bad arguments discovered after CLI11 accepted them (ranges that depend on
// the input matrix, malformed index pairs, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string position(CellRef ref) {
  return "row " + std::to_string(ref.row + 1) + ", column " + std::to_string(ref.col + 1);
}

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& text, const std::string& option) {
  const auto comma = text.find(',');
  auto parse_one = [&](const std::string& part) -> std::size_t {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      if (part.empty() || part.front() == '-') throw std::invalid_argument(part);
      value = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw UsageError(option + " expects two non-negative indices 'i,j', got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
  };
  if (comma == std::string::npos) {
    throw UsageError(option + " expects two non-negative indices 'i,j', got '" + text + "'");
  }
  return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void write_text(const std::string& path, const std::string& text) {
  auto file = open_output(path);
  file << text;
  if (!file) throw std::runtime_error("error writing " + path);
}

// --- impute -----------------------------------------------------------------

struct ImputeArgs {
  std::string input;
  std::string output;
  std::string trace;
  std::size_t k{0};
};

int cmd_impute(const ImputeArgs& args, std::ostream& out, std::ostream& err) {
  const DataMatrix matrix = typed_csv::read_file(args.input);
  const ImputationResult result = impute(matrix, args.k);
  typed_csv::write_file(args.output, result.matrix);

  if (!args.trace.empty()) {
    std::ostringstream trace;
    trace << "row,col,donor_row,distance,weight\n";
    for (const auto& [target, neighbors] : result.trace) {
      for (const auto& donor : neighbors.donors) {
        trace << target.row << ',' << target.col << ',' << donor.row << ','
              << format_real(donor.distance) << ',' << format_real(donor.weight) << '\n';
      }
    }
    write_text(args.trace, trace.str());
  }

  out << "imputed " << result.trace.size() << " cell(s)\n";
  for (const CellRef ref : result.unimputable) {
    err << "unimputable: " << position(ref) << " (no comparable donor row)\n";
  }
  return result.unimputable.empty() ? kSuccess : kDataError;
}

// --- benchmark --------------------------------------------------------------

struct BenchmarkArgs {
  std::string input;
  std::string fixture_name;
  std::size_t k_min{1};
  std::size_t k_max{1};
  std::size_t nan_min{1};
  std::size_t nan_max{1};
  std::size_t trials{100};
  std::uint64_t seed{0};
  std::string output;
  std::string summary;
  std::string mask_mode{"row"};
  unsigned threads{1};
};

std::string summary_table(const BenchmarkReport& report) {
  std::ostringstream table;
  table << "k,min,q1,median,q3,max,mean\n";
  for (const auto& [k, s] : report.per_k) {
    table << k << ',' << format_real(s.min) << ',' << format_real(s.q1) << ',' << format_real(s.median)
          << ',' << format_real(s.q3) << ',' << format_real(s.max) << ',' << format_real(s.mean) << '\n';
  }
  return table.str();
}

std::string sample_table(const BenchmarkReport& report) {
  std::ostringstream table;
  table << "k,missing_count,trial,error,imputable\n";
  for (const auto& [key, trials] : report.samples) {
    for (const auto& t : trials) {
      table << key.k << ',' << key.missing_count << ',' << t.trial << ','
            << (t.error ? format_real(*t.error) : std::string{}) << ',' << (t.error ? 1 : 0) << '\n';
    }
  }
  return table.str();
}

int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out, std::ostream& err) {
  if (args.input.empty() == args.fixture_name.empty()) {
    throw UsageError("benchmark needs exactly one of --input or --fixture");
  }
  if (args.k_min > args.k_max) throw UsageError("--k-min must not exceed --k-max");
  if (args.nan_min > args.nan_max) throw UsageError("--nan-min must not exceed --nan-max");

  std::string name;
  std::optional<DataMatrix> matrix;
  if (!args.fixture_name.empty()) {
    try {
      matrix = fixture(args.fixture_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    name = args.fixture_name;
  } else {
    matrix = typed_csv::read_file(args.input);
    name = fs::path(args.input).stem().string();
  }
  if (args.nan_max > matrix->rows()) {
    throw UsageError("--nan-max " + std::to_string(args.nan_max) + " exceeds the " +
                     std::to_string(matrix->rows()) + " rows of " + name);
  }
  if (const auto gaps = missing_cells(*matrix); !gaps.empty()) {
    err << "error: benchmark input must be complete; first Missing cell at " << position(gaps.front())
        << '\n';
    return kDataError;
  }

  BenchmarkConfig config;
  for (std::size_t k = args.k_min; k <= args.k_max; ++k) config.k_values.push_back(k);
  for (std::size_t c = args.nan_min; c <= args.nan_max; ++c) config.missing_counts.push_back(c);
  config.trials = args.trials;
  config.seed = args.seed;
  config.mask_mode = args.mask_mode == "column" ? MaskMode::SameColumn : MaskMode::OnePerRow;
  config.threads = args.threads;

  const BenchmarkReport report = benchmark(*matrix, config, name);
  write_text(args.output, sample_table(report));
  const std::string summary = summary_table(report);
  if (!args.summary.empty()) write_text(args.summary, summary);
  out << summary;
  if (report.unimputable_trials > 0) {
    err << report.unimputable_trials << " trial(s) left a cell unimputable and were excluded from the summary\n";
  }
  return kSuccess;
}

// --- distance ---------------------------------------------------------------

struct DistanceArgs {
  std::string input;
  std::string rows;
};

int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream&) {
  const auto [i, j] = parse_index_pair(args.rows, "--rows");
  const DataMatrix matrix = typed_csv::read_file(args.input);
  if (i >= matrix.rows() || j >= matrix.rows()) {
    throw UsageError("--rows indices must be below " + std::to_string(matrix.rows()));
  }
  if (i == j) throw UsageError("--rows needs two different rows");

  const auto distance = row_distance(matrix, i, j);
  if (!distance) {
    out << "incomparable\n";
    return kSuccess;
  }
  out << "distance: " << format_real(distance->value) << '\n';
  out << "shared_features: " << distance->shared_features << '\n';
  out << "column,kind,cell_distance\n";
  const auto per_column = column_distances(matrix, i, j);
  for (std::size_t l = 0; l < matrix.cols(); ++l) {
    out << matrix.column_names()[l] << ',' << to_string(matrix.kind(l)) << ','
        << (per_column[l] ? format_real(*per_column[l]) : std::string("missing")) << '\n';
  }
  return kSuccess;
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const std::string& input, std::ostream& out) {
  DataMatrix matrix = [&] {
    try {
      return typed_csv::read_file(input, typed_csv::ParseMode::Lenient);
    } catch (const ParseError& e) {
      out << e.what() << '\n';
      throw;
    }
  }();
  const auto violations = validate(matrix);
  for (const auto& v : violations) out << position(v.where) << ": " << v.message << '\n';
  if (violations.empty()) {
    out << "ok: " << matrix.rows() << " rows x " << matrix.cols() << " columns\n";
    return kSuccess;
  }
  return kDataError;
}

// --- fixtures ---------------------------------------------------------------

struct FixturesArgs {
  std::string name;
  std::string output;
  std::vector<std::string> masks;
};

int cmd_fixtures(const FixturesArgs& args, std::ostream& out) {
  if (args.name.empty()) {
    if (!args.masks.empty() || !args.output.empty()) throw UsageError("--mask and --output need --name");
    for (auto name : fixture_names()) out << name << '\n';
    return kSuccess;
  }
  DataMatrix matrix = [&] {
    try {
      return fixture(args.name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  for (const auto& mask : args.masks) {
    const auto [row, col] = parse_index_pair(mask, "--mask");
    if (row >= matrix.rows() || col >= matrix.cols()) {
      throw UsageError("--mask " + mask + " is outside the " + std::to_string(matrix.rows()) + "x" +
                       std::to_string(matrix.cols()) + " matrix");
    }
    matrix.set({row, col}, Missing{});
  }
  if (args.output.empty()) {
    out << typed_csv::serialize(matrix);
  } else {
    typed_csv::write_file(args.output, matrix);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-nearest-neighbor imputation for crisp, interval and fuzzy tabular data", "hetknn"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  constexpr auto kMaxCount = std::numeric_limits<std::size_t>::max();

  ImputeArgs impute_args;
  auto* impute_cmd = app.add_subcommand("impute", "Impute every missing cell of a typed-CSV file");
  impute_cmd->add_option("--input", impute_args.input, "Typed-CSV input")->required();
  impute_cmd->add_option("--output", impute_args.output, "Where to write the completed matrix")->required();
  impute_cmd->add_option("--k", impute_args.k, "Number of neighbors")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxCount));
  impute_cmd->add_option("--trace", impute_args.trace, "Write donors, distances and weights (CSV)");

  BenchmarkArgs bench_args;
  auto* bench_cmd = app.add_subcommand("benchmark", "Random masking benchmark over k and missing count");
  auto* bench_input = bench_cmd->add_option("--input", bench_args.input, "Complete typed-CSV matrix");
  auto* bench_fixture = bench_cmd->add_option("--fixture", bench_args.fixture_name, "Embedded matrix name");
  bench_input->excludes(bench_fixture);
  bench_cmd->add_option("--k-min", bench_args.k_min, "Smallest k")->check(CLI::Range(std::size_t{1}, kMaxCount));
  bench_cmd->add_option("--k-max", bench_args.k_max, "Largest k")->check(CLI::Range(std::size_t{1}, kMaxCount));
  bench_cmd->add_option("--nan-min", bench_args.nan_min, "Smallest number of masked cells");
  bench_cmd->add_option("--nan-max", bench_args.nan_max, "Largest number of masked cells");
  bench_cmd->add_option("--trials", bench_args.trials, "Trials per (k, missing count)")
      ->check(CLI::Range(std::size_t{1}, kMaxCount));
  bench_cmd->add_option("--seed", bench_args.seed, "Seed for every random choice");
  bench_cmd->add_option("--output", bench_args.output, "Per-trial table (CSV)")->required();
  bench_cmd->add_option("--summary", bench_args.summary, "Also write the per-k summary table here");
  bench_cmd->add_option("--mask-mode", bench_args.mask_mode, "row: at most one per row; column: one column")
      ->check(CLI::IsMember({"row", "column"}));
  bench_cmd->add_option("--threads", bench_args.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 1024u));

  DistanceArgs distance_args;
  auto* distance_cmd = app.add_subcommand("distance", "Show the distance between two rows");
  distance_cmd->add_option("--input", distance_args.input, "Typed-CSV input")->required();
  distance_cmd->add_option("--rows", distance_args.rows, "Zero-based row pair 'i,j'")->required();

  std::string validate_input;
  auto* validate_cmd = app.add_subcommand("validate", "Check a typed-CSV file against its schema");
  validate_cmd->add_option("--input", validate_input, "Typed-CSV input")->required();

  FixturesArgs fixtures_args;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or export the embedded case-study matrices");
  fixtures_cmd->add_option("--name", fixtures_args.name, "Fixture to export");
  fixtures_cmd->add_option("--output", fixtures_args.output, "Write here instead of standard output");
  fixtures_cmd->add_option("--mask", fixtures_args.masks, "Zero-based cell 'row,col' to blank (repeatable)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("hetknn");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*impute_cmd) return cmd_impute(impute_args, out, err);
    if (*bench_cmd) return cmd_benchmark(bench_args, out, err);
    if (*distance_cmd) return cmd_distance(distance_args, out, err);
    if (*validate_cmd) return cmd_validate(validate_input, out);
    if (*fixtures_cmd) return cmd_fixtures(fixtures_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace hetknn::cli
