#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fastdiam/bench.hpp"
#include "fastdiam/generators.hpp"
#include "fastdiam/io.hpp"

using namespace fastdiam;
using namespace fastdiam::bench;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> fields;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) fields.push_back(cur);
  if (!s.empty() && s.back() == sep) fields.emplace_back();
  return fields;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur)) out.push_back(cur);
  return out;
}

/// Column lookup by header name.
std::string column(const std::string& csv, std::size_t row, const std::string& name) {
  const auto ls = lines(csv);
  const auto header = split(ls.at(0), ',');
  const auto fields = split(ls.at(row), ',');
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return fields.at(i);
  }
  ADD_FAILURE() << "no column " << name;
  return {};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("fastdiam_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Csv, HeaderIsStable) {
  EXPECT_EQ(csv_header(),
            "algorithm,instance,n,m,t,start,seed,estimate,upper,certificate,oracle,oracle_method,"
            "abs_error,ratio,time_ms_median,time_ms_min,distance_evaluations");
}

TEST(Csv, RecordColumnCountAndQuoting) {
  BenchRecord r;
  r.algorithm = "iterative";
  r.instance = "dir,with,comma/points.txt";
  r.estimate = 0.1;
  const std::string row = to_csv(r);
  EXPECT_NE(row.find("\"dir,with,comma/points.txt\""), std::string::npos);
  EXPECT_NE(row.find(",0.10000000000000001,"), std::string::npos);
  BenchRecord plain;
  plain.algorithm = "exact-bf";
  EXPECT_EQ(split(to_csv(plain), ',').size(), split(csv_header(), ',').size());
}

TEST(Cli, RunIterativeOnTwoPointFile) {
  const std::string path = write_temp("two.txt", "2 2\n0 0\n3 4\n");
  const CliResult r = cli({"run", "--input", path, "--algorithm", "iterative", "--t", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 2u);
  EXPECT_EQ(column(r.out, 1, "estimate"), "5");
  EXPECT_EQ(column(r.out, 1, "distance_evaluations"), "16");
  EXPECT_EQ(column(r.out, 1, "t"), "2");
  EXPECT_EQ(column(r.out, 1, "oracle"), "");
}

TEST(Cli, RunExactOnWorstCaseFile) {
  const auto path = std::filesystem::temp_directory_path() / "fastdiam_cli_worst.txt";
  const CliResult g = cli({"generate", "--distribution", "worst-case-5", "--output", path.string()});
  ASSERT_EQ(g.code, 0) << g.err;
  const CliResult r = cli({"run", "--input", path.string(), "--algorithm", "exact-bf"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(column(r.out, 1, "estimate")), std::sqrt(5.0 - 2.0 * std::sqrt(3.0)),
              1e-15);
}

TEST(Cli, SingletonShortCircuits) {
  const std::string path = write_temp("one.txt", "1 3\n0 0 0\n");
  for (const char* algo : {"exact-bf", "double-sweep", "iterative", "randomized"}) {
    const CliResult r = cli({"compare", "--input", path, "--algorithm", algo});
    ASSERT_EQ(r.code, 0) << algo << ": " << r.err;
    EXPECT_EQ(column(r.out, 1, "estimate"), "0");
    EXPECT_EQ(column(r.out, 1, "oracle"), "0");
  }
}

TEST(Cli, CompareRandomizedOnCube) {
  const CliResult r = cli({"compare", "--distribution", "cube", "--n", "10000", "--m", "3",
                           "--algorithm", "randomized", "--t", "2", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(std::stod(column(r.out, 1, "abs_error")), 1e-4);
  EXPECT_GE(std::stod(column(r.out, 1, "ratio")), 1.0 - 1e-12);
  EXPECT_EQ(column(r.out, 1, "oracle_method"), "exact-bf");
  EXPECT_EQ(column(r.out, 1, "distance_evaluations"), "60000");
}

TEST(Cli, CompareUsesCalipersForLargePlanarSets) {
  const CliResult r = cli({"compare", "--distribution", "ball", "--n", "5000", "--m", "2",
                           "--algorithm", "cstar-2d"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, 1, "oracle_method"), "exact-rc2d");
  const double upper = std::stod(column(r.out, 1, "upper"));
  EXPECT_GE(upper, std::stod(column(r.out, 1, "oracle")));
}

TEST(Cli, GenerateWritesLoadableFile) {
  const auto path = std::filesystem::temp_directory_path() / "fastdiam_cli_gen.txt";
  const CliResult r = cli({"generate", "--distribution", "ellipsoid", "--n", "50", "--m", "4",
                           "--seed", "3", "--axes", "1,2,3,4", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_points(path.string()), generate({Distribution::Ellipsoid, 50, 4, {1, 2, 3, 4}, 3}));
}

TEST(Cli, GenerateToStdout) {
  const CliResult r = cli({"generate", "--distribution", "cube", "--n", "3", "--m", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0), "3 2");
  EXPECT_EQ(lines(r.out).size(), 4u);
}

TEST(Cli, BenchMatrix) {
  const CliResult r = cli({"bench", "--distribution", "cube,sphere", "--n", "200", "--m", "2,3",
                           "--algorithm", "iterative,randomized,cstar-2d", "--t", "2,3",
                           "--oracle", "--repeats", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  // Per instance: two t values for each iterative algorithm, plus cstar-2d when m = 2.
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 1u + 2 * 5 + 2 * 4);
  for (std::size_t row = 1; row < ls.size(); ++row) {
    EXPECT_GE(std::stod(column(r.out, row, "abs_error")), -1e-9);
  }
  EXPECT_NE(r.err.find("skipping cstar-2d"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "fastdiam_cli_out.csv";
  const CliResult r = cli({"run", "--distribution", "sphere", "--n", "100", "--m", "3",
                           "--algorithm", "double-sweep", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, csv_header());
}

TEST(Cli, ErrorsAreNonZero) {
  const std::string path = write_temp("three_d.txt", "2 3\n0 0 0\n1 1 1\n");
  const std::string bad = write_temp("bad.txt", "2 2\n0 0\n");
  EXPECT_NE(cli({}).code, 0);
  EXPECT_NE(cli({"frobnicate"}).code, 0);
  EXPECT_NE(cli({"run", "--input", path, "--algorithm", "nope"}).code, 0);
  EXPECT_NE(cli({"run", "--algorithm", "iterative"}).code, 0);
  EXPECT_NE(cli({"run", "--input", path, "--algorithm", "iterative", "--bogus", "1"}).code, 0);
  EXPECT_NE(cli({"run", "--input", path, "--algorithm", "cstar-2d"}).code, 0);
  EXPECT_NE(cli({"run", "--input", path, "--algorithm", "exact-rc2d"}).code, 0);
  EXPECT_NE(cli({"run", "--input", "/no/such/file", "--algorithm", "exact-bf"}).code, 0);
  EXPECT_NE(cli({"run", "--distribution", "cube", "--algorithm", "exact-bf"}).code, 0);

  const CliResult parse = cli({"run", "--input", bad, "--algorithm", "exact-bf"});
  EXPECT_NE(parse.code, 0);
  EXPECT_NE(parse.err.find(":3:"), std::string::npos) << parse.err;

  const CliResult cstar = cli({"run", "--input", path, "--algorithm", "cstar-2d"});
  EXPECT_NE(cstar.err.find("m = 2"), std::string::npos) << cstar.err;
}

TEST(Cli, DeterministicApartFromTimings) {
  const std::vector<std::string> args{"bench", "--distribution", "ball,ellipsoid-rotated", "--n",
                                      "500", "--m", "3", "--algorithm",
                                      "randomized,iterative,double-sweep", "--t", "2,5", "--seed",
                                      "11", "--oracle"};
  const CliResult a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0);
  const auto la = lines(a.out), lb = lines(b.out);
  ASSERT_EQ(la.size(), lb.size());
  for (std::size_t row = 1; row < la.size(); ++row) {
    auto fa = split(la[row], ','), fb = split(lb[row], ',');
    // time_ms_median, time_ms_min sit at 14 and 15.
    fa.erase(fa.begin() + 14, fa.begin() + 16);
    fb.erase(fb.begin() + 14, fb.begin() + 16);
    EXPECT_EQ(fa, fb);
  }
}

TEST(RunAlgorithm, NamesRoundTrip) {
  for (int k = 0; k < 6; ++k) {
    const auto a = static_cast<Algorithm>(k);
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  EXPECT_FALSE(parse_algorithm("har-peled").has_value());
}
