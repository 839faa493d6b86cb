#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fastdiam/algorithms.hpp"
#include "fastdiam/point_set.hpp"

namespace fastdiam::bench {

enum class Algorithm {
  ExactBruteForce,
  ExactCalipers2d,
  DoubleSweep,
  CStar2d,
  Iterative,
  Randomized,
};

/// CLI names: exact-bf, exact-rc2d, double-sweep, cstar-2d, iterative, randomized.
std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
/// True for the algorithms whose result depends on RunConfig::t.
bool uses_iterations(Algorithm a) noexcept;

struct AlgorithmOutcome {
  double estimate = 0.0;
  std::optional<double> upper;
  std::optional<Certificate> certificate;
  std::uint64_t distance_evaluations = 0;
};

/// Dispatches one algorithm. A singleton set short-circuits to estimate 0
/// with no work done.
AlgorithmOutcome run_algorithm(const PointSet& set, Algorithm algorithm, const RunConfig& cfg);

struct OracleValue {
  double diameter = 0.0;
  Algorithm method = Algorithm::ExactBruteForce;
};

/// Rotating calipers for planar sets with more than 2048 points, brute force
/// otherwise.
OracleValue exact_oracle(const PointSet& set);

/// One CSV row.
struct BenchRecord {
  std::string algorithm;
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> t;
  std::size_t start = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  std::optional<double> upper;
  std::optional<Certificate> certificate;
  std::optional<double> oracle;
  std::optional<Algorithm> oracle_method;
  std::optional<double> abs_error;
  std::optional<double> ratio;
  double time_ms_median = 0.0;
  double time_ms_min = 0.0;
  std::uint64_t distance_evaluations = 0;
};

std::string csv_header();
std::string to_csv(const BenchRecord& record);

struct MeasureOptions {
  std::size_t repeats = 1;
  bool with_oracle = false;
};

/// Runs `algorithm` `repeats` times (timings only; results are
/// deterministic), optionally evaluates the exact oracle, fills a record.
BenchRecord measure(const PointSet& set, std::string instance, Algorithm algorithm,
                    const RunConfig& cfg, const MeasureOptions& options);

/// Entry point of the `fastdiam` tool. `args` excludes the program name.
/// Returns the process exit code; CSV goes to `out` unless --output is given.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fastdiam::bench
