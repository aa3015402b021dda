#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "hetknn/fixtures.hpp"
#include "hetknn/typed_csv.hpp"

namespace hetknn {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hetknn_cli_" + std::to_string(std::random_device{}()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "hetknn");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, FixturesListAndExport) {
  auto listed = run({"fixtures"});
  EXPECT_EQ(listed.code, 0);
  EXPECT_EQ(listed.out, "case1\ncase2\ncase3\n");

  auto exported = run({"fixtures", "--name", "case1", "--mask", "2,2"});
  EXPECT_EQ(exported.code, 0);
  EXPECT_NE(exported.out.find("0.5802,[0.5547;0.83205],\n"), std::string::npos);

  EXPECT_EQ(run({"fixtures", "--name", "nope"}).code, 2);
  EXPECT_EQ(run({"fixtures", "--name", "case1", "--mask", "3,0"}).code, 2);
}

TEST_F(CliTest, ImputeCaseStudy) {
  ASSERT_EQ(run({"fixtures", "--name", "case1", "--mask", "2,2", "--output", path("in.csv")}).code, 0);
  auto r = run({"impute", "--input", path("in.csv"), "--output", path("out.csv"), "--k", "2", "--trace",
                path("trace.csv")});
  EXPECT_EQ(r.code, 0) << r.err;
  const DataMatrix out = typed_csv::read_file(path("out.csv"));
  const auto t = std::get<TriangularFuzzy>(out.at(2, 2));
  EXPECT_NEAR(t.a1, 0.3935, 1e-3);
  EXPECT_NEAR(t.a2, 0.5604, 1e-3);
  EXPECT_NEAR(t.a3, 0.7273, 1e-3);

  const std::string trace = slurp(path("trace.csv"));
  EXPECT_EQ(trace.rfind("row,col,donor_row,distance,weight\n2,2,1,", 0), 0u) << trace;
  EXPECT_NE(trace.find("\n2,2,0,"), std::string::npos);
}

TEST_F(CliTest, ImputeCompleteInputIsCanonicalCopy) {
  const std::string in = write("in.csv", " c1:crisp, c2:interval\n0.50,[0.1; 0.2]\n0.25,[0.3;0.4]\n");
  EXPECT_EQ(run({"impute", "--input", in, "--output", path("out.csv"), "--k", "3"}).code, 0);
  EXPECT_EQ(slurp(path("out.csv")), "c1:crisp,c2:interval\n0.5,[0.1;0.2]\n0.25,[0.3;0.4]\n");
}

TEST_F(CliTest, ImputeUsageAndDataErrors) {
  const std::string in = write("in.csv", "x:crisp,y:crisp\n1,2\n,3\n");
  auto zero = run({"impute", "--input", in, "--output", path("o.csv"), "--k", "0"});
  EXPECT_EQ(zero.code, 2);
  EXPECT_FALSE(zero.err.empty());

  auto bad = run({"impute", "--input", write("bad.csv", "x:crisp\n1\nabc\n"), "--output", path("o.csv"),
                  "--k", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("row 2, column 1"), std::string::npos);

  auto lonely = run({"impute", "--input", write("one.csv", "x:crisp\n5\n\n5\n"), "--output", path("o.csv"),
                     "--k", "2"});
  EXPECT_EQ(lonely.code, 1);
  EXPECT_NE(lonely.err.find("unimputable: row 2, column 1"), std::string::npos);
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
  auto r = run({"validate", "--input", "x.csv", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, DistanceCaseStudy) {
  ASSERT_EQ(run({"fixtures", "--name", "case1", "--mask", "2,2", "--output", path("in.csv")}).code, 0);
  auto first = run({"distance", "--input", path("in.csv"), "--rows", "2,0"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out.rfind("distance: 0.2661", 0), 0u) << first.out;
  EXPECT_NE(first.out.find("shared_features: 2"), std::string::npos);
  EXPECT_NE(first.out.find("c3,fuzzy,missing"), std::string::npos);

  auto second = run({"distance", "--input", path("in.csv"), "--rows", "2,1"});
  EXPECT_EQ(second.out.rfind("distance: 0.0943", 0), 0u) << second.out;

  EXPECT_EQ(run({"distance", "--input", path("in.csv"), "--rows", "1,1"}).code, 2);
  EXPECT_EQ(run({"distance", "--input", path("in.csv"), "--rows", "0,7"}).code, 2);
  EXPECT_EQ(run({"distance", "--input", path("in.csv"), "--rows", "a,b"}).code, 2);
}

TEST_F(CliTest, DistanceDuplicateAndIncomparable) {
  const std::string dup = write("dup.csv", "a:crisp,b:fuzzy\n0.3,(0;0.1;0.2)\n0.3,(0;0.1;0.2)\n");
  auto same = run({"distance", "--input", dup, "--rows", "0,1"});
  EXPECT_EQ(same.out.rfind("distance: 0\n", 0), 0u);

  const std::string apart = write("apart.csv", "a:crisp,b:crisp\n0.3,\n,0.4\n");
  auto r = run({"distance", "--input", apart, "--rows", "0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "incomparable\n");
}

TEST_F(CliTest, Validate) {
  for (auto name : fixture_names()) {
    typed_csv::write_file(path("f.csv"), fixture(name));
    EXPECT_EQ(run({"validate", "--input", path("f.csv")}).code, 0) << name;
  }
  auto reversed = run({"validate", "--input", write("rev.csv", "x:crisp,y:interval\n1,[0.9;0.3]\n2,[0.8;0.1]\n")});
  EXPECT_EQ(reversed.code, 1);
  EXPECT_EQ(reversed.out, "row 1, column 2: lower > upper\nrow 2, column 2: lower > upper\n");

  EXPECT_EQ(run({"validate", "--input", write("ragged.csv", "x:crisp,y:crisp\n1,2\n3\n")}).code, 1);
  EXPECT_EQ(run({"validate", "--input", path("does_not_exist.csv")}).code, 1);
}

TEST_F(CliTest, BenchmarkOutputs) {
  auto r = run({"benchmark", "--fixture", "case3", "--k-min", "1", "--k-max", "4", "--nan-min", "1",
                "--nan-max", "5", "--trials", "20", "--seed", "7", "--output", path("raw.csv"), "--summary",
                path("summary.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string raw = slurp(path("raw.csv"));
  EXPECT_EQ(raw.rfind("k,missing_count,trial,error,imputable\n1,1,0,", 0), 0u);
  EXPECT_EQ(std::count(raw.begin(), raw.end(), '\n'), 1 + 4 * 5 * 20);
  const std::string summary = slurp(path("summary.csv"));
  EXPECT_EQ(summary.rfind("k,min,q1,median,q3,max,mean\n1,", 0), 0u);
  EXPECT_EQ(summary, r.out);

  auto again = run({"benchmark", "--fixture", "case3", "--k-min", "1", "--k-max", "4", "--nan-min", "1",
                    "--nan-max", "5", "--trials", "20", "--seed", "7", "--output", path("raw2.csv"),
                    "--threads", "3"});
  EXPECT_EQ(slurp(path("raw2.csv")), raw);
}

TEST_F(CliTest, BenchmarkNothingMasked) {
  auto r = run({"benchmark", "--fixture", "case1", "--nan-min", "0", "--nan-max", "0", "--trials", "1",
                "--output", path("raw.csv")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path("raw.csv")), "k,missing_count,trial,error,imputable\n1,0,0,0,1\n");
}

TEST_F(CliTest, BenchmarkArgumentErrors) {
  EXPECT_EQ(run({"benchmark", "--fixture", "case1", "--nan-max", "4", "--output", path("r.csv")}).code, 2);
  EXPECT_EQ(run({"benchmark", "--output", path("r.csv")}).code, 2);
  EXPECT_EQ(run({"benchmark", "--fixture", "case1", "--k-min", "3", "--k-max", "2", "--output",
                 path("r.csv")}).code, 2);
  const std::string gap = write("gap.csv", "x:crisp,y:crisp\n1,2\n,3\n");
  EXPECT_EQ(run({"benchmark", "--input", gap, "--output", path("r.csv")}).code, 1);
}

}  // namespace
}  // namespace hetknn
