#include "fastdiam/bench.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fastdiam/errors.hpp"
#include "fastdiam/exact.hpp"
#include "fastdiam/generators.hpp"
#include "fastdiam/io.hpp"

namespace fastdiam::bench {

namespace {

struct NamedAlgorithm {
  Algorithm kind;
  std::string_view name;
};

constexpr std::array<NamedAlgorithm, 6> kAlgorithms{{
    {Algorithm::ExactBruteForce, "exact-bf"},
    {Algorithm::ExactCalipers2d, "exact-rc2d"},
    {Algorithm::DoubleSweep, "double-sweep"},
    {Algorithm::CStar2d, "cstar-2d"},
    {Algorithm::Iterative, "iterative"},
    {Algorithm::Randomized, "randomized"},
}};

constexpr std::size_t kCalipersOracleThreshold = 2048;
constexpr double kCompareSlack = 1e-9;

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_ms(double ms) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), ms, std::chars_format::fixed, 6);
  return ec == std::errc() ? std::string(buf, ptr) : std::string();
}

template <typename T, typename F>
std::string optional_field(const std::optional<T>& v, F&& format) {
  return v ? format(*v) : std::string();
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

void require_plane(const PointSet& set, Algorithm a) {
  if (set.dim() != 2) {
    throw UsageError(std::string(to_string(a)) + " requires m = 2, got m = " +
                     std::to_string(set.dim()));
  }
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  for (const auto& entry : kAlgorithms) {
    if (entry.kind == a) return entry.name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (const auto& entry : kAlgorithms) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

bool uses_iterations(Algorithm a) noexcept {
  return a == Algorithm::Iterative || a == Algorithm::Randomized;
}

AlgorithmOutcome run_algorithm(const PointSet& set, Algorithm algorithm, const RunConfig& cfg) {
  if (algorithm == Algorithm::ExactCalipers2d || algorithm == Algorithm::CStar2d) {
    require_plane(set, algorithm);
  }
  if (cfg.start_index >= set.size()) {
    throw UsageError("start index " + std::to_string(cfg.start_index) + " out of range for " +
                     std::to_string(set.size()) + " points");
  }
  if (set.size() == 1) return {};

  AlgorithmOutcome out;
  switch (algorithm) {
    case Algorithm::ExactBruteForce: {
      const ExactResult r = brute_force_diameter(set);
      out.estimate = r.diameter;
      out.upper = r.diameter;
      out.distance_evaluations = r.comparisons;
      break;
    }
    case Algorithm::ExactCalipers2d: {
      const ExactResult r = rotating_calipers_diameter_2d(set);
      out.estimate = r.diameter;
      out.upper = r.diameter;
      out.distance_evaluations = r.comparisons;
      break;
    }
    case Algorithm::DoubleSweep: {
      const CertifiedBounds b = double_sweep(set, cfg.start_index);
      out.estimate = b.lower;
      out.upper = b.upper;
      out.certificate = b.certificate;
      out.distance_evaluations = b.distance_evaluations;
      break;
    }
    case Algorithm::CStar2d: {
      const CertifiedBounds b = c_star_estimate_2d(set, cfg.start_index);
      out.estimate = b.lower;
      out.upper = b.upper;
      out.certificate = b.certificate;
      out.distance_evaluations = b.distance_evaluations;
      break;
    }
    case Algorithm::Iterative: {
      const DiameterEstimate e = iterative_approx(set, cfg);
      out.estimate = e.lower;
      out.distance_evaluations = e.distance_evaluations;
      break;
    }
    case Algorithm::Randomized: {
      const DiameterEstimate e = randomized_approx(set, cfg);
      out.estimate = e.lower;
      out.distance_evaluations = e.distance_evaluations;
      break;
    }
  }
  return out;
}

OracleValue exact_oracle(const PointSet& set) {
  if (set.size() == 1) return {0.0, Algorithm::ExactBruteForce};
  if (set.dim() == 2 && set.size() > kCalipersOracleThreshold) {
    return {rotating_calipers_diameter_2d(set).diameter, Algorithm::ExactCalipers2d};
  }
  return {brute_force_diameter(set).diameter, Algorithm::ExactBruteForce};
}

std::string csv_header() {
  return "algorithm,instance,n,m,t,start,seed,estimate,upper,certificate,oracle,oracle_method,"
         "abs_error,ratio,time_ms_median,time_ms_min,distance_evaluations";
}

std::string to_csv(const BenchRecord& r) {
  auto real = [](double v) { return format_real(v); };
  std::string line;
  line += csv_escape(r.algorithm) + ',';
  line += csv_escape(r.instance) + ',';
  line += std::to_string(r.n) + ',';
  line += std::to_string(r.m) + ',';
  line += optional_field(r.t, [](std::size_t t) { return std::to_string(t); }) + ',';
  line += std::to_string(r.start) + ',';
  line += std::to_string(r.seed) + ',';
  line += format_real(r.estimate) + ',';
  line += optional_field(r.upper, real) + ',';
  line += optional_field(r.certificate, [](Certificate c) { return std::string(to_string(c)); }) +
          ',';
  line += optional_field(r.oracle, real) + ',';
  line += optional_field(r.oracle_method,
                         [](Algorithm a) { return std::string(to_string(a)); }) +
          ',';
  line += optional_field(r.abs_error, real) + ',';
  line += optional_field(r.ratio, real) + ',';
  line += format_ms(r.time_ms_median) + ',';
  line += format_ms(r.time_ms_min) + ',';
  line += std::to_string(r.distance_evaluations);
  return line;
}

BenchRecord measure(const PointSet& set, std::string instance, Algorithm algorithm,
                    const RunConfig& cfg, const MeasureOptions& options) {
  const std::size_t repeats = std::max<std::size_t>(1, options.repeats);
  std::vector<double> times;
  times.reserve(repeats);
  AlgorithmOutcome outcome;
  for (std::size_t rep = 0; rep < repeats; ++rep) {
    const auto begin = std::chrono::steady_clock::now();
    AlgorithmOutcome current = run_algorithm(set, algorithm, cfg);
    const auto end = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(end - begin).count());
    if (rep == 0) outcome = current;
  }

  BenchRecord r;
  r.algorithm = std::string(to_string(algorithm));
  r.instance = std::move(instance);
  r.n = set.size();
  r.m = set.dim();
  if (uses_iterations(algorithm)) r.t = cfg.t;
  r.start = cfg.start_index;
  r.seed = cfg.seed;
  r.estimate = outcome.estimate;
  r.upper = outcome.upper;
  r.certificate = outcome.certificate;
  r.time_ms_median = median_of(times);
  r.time_ms_min = *std::min_element(times.begin(), times.end());
  r.distance_evaluations = outcome.distance_evaluations;

  if (options.with_oracle) {
    const OracleValue oracle = exact_oracle(set);
    r.oracle = oracle.diameter;
    r.oracle_method = oracle.method;
    r.abs_error = oracle.diameter - outcome.estimate;
    r.ratio = outcome.estimate > 0.0 ? oracle.diameter / outcome.estimate : 1.0;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct InstanceOptions {
  std::string input;
  std::string distribution;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::vector<double> axes;
};

struct RunOptions {
  std::string algorithm;
  std::size_t t = 2;
  std::size_t start = 0;
  std::size_t repeats = 1;
  std::string output;
};

struct BenchOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> distributions{"cube",      "ball",
                                         "sphere",    "ellipsoid",
                                         "ellipsoid-rotated", "ellipsoid-regular"};
  std::vector<std::size_t> ns{10000};
  std::vector<std::size_t> ms{3};
  std::vector<std::string> algorithms{"iterative", "randomized"};
  std::vector<std::size_t> ts{2};
  std::uint64_t seed = 0;
  std::size_t start = 0;
  std::size_t repeats = 3;
  bool oracle = false;
  std::string output;
};

struct Instance {
  PointSet set;
  std::string descriptor;
};

Distribution require_distribution(const std::string& name) {
  const auto kind = parse_distribution(name);
  if (!kind) throw UsageError("unknown distribution '" + name + "'");
  return *kind;
}

Algorithm require_algorithm(const std::string& name) {
  const auto algorithm = parse_algorithm(name);
  if (!algorithm) throw UsageError("unknown algorithm '" + name + "'");
  return *algorithm;
}

PointSet generate_from(Distribution kind, std::size_t n, std::size_t m, std::uint64_t seed,
                       const std::vector<double>& axes) {
  if (kind != Distribution::WorstCase5 && (n == 0 || m == 0)) {
    throw UsageError("--n and --m are required with --distribution " +
                     std::string(to_string(kind)));
  }
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.axes = axes;
  return generate(spec);
}

Instance load_instance(const InstanceOptions& o) {
  if (!o.input.empty()) return {load_points(o.input), o.input};
  if (o.distribution.empty()) throw UsageError("one of --input or --distribution is required");
  const Distribution kind = require_distribution(o.distribution);
  return {generate_from(kind, o.n, o.m, o.seed, o.axes), std::string(to_string(kind))};
}

void add_instance_options(CLI::App* cmd, InstanceOptions& o) {
  auto* input = cmd->add_option("--input", o.input, "Dataset file ('n m' header, one point per line)");
  auto* dist = cmd->add_option("--distribution", o.distribution,
                               "cube|ball|sphere|ellipsoid|ellipsoid-rotated|ellipsoid-regular|"
                               "worst-case-5");
  input->excludes(dist);
  cmd->add_option("--n", o.n, "Number of generated points");
  cmd->add_option("--m", o.m, "Dimension of generated points");
  cmd->add_option("--seed", o.seed, "Generator and randomized-algorithm seed");
  cmd->add_option("--axes", o.axes, "Ellipsoid semi-axes, comma separated")->delimiter(',');
}

/// Holds either the --output file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int do_generate(const InstanceOptions& o, const std::string& output, std::ostream& out) {
  if (!o.input.empty()) throw UsageError("generate takes --distribution, not --input");
  if (o.distribution.empty()) throw UsageError("generate requires --distribution");
  const Distribution kind = require_distribution(o.distribution);
  const PointSet set = generate_from(kind, o.n, o.m, o.seed, o.axes);
  if (output.empty() || output == "-") {
    write_points(set, out);
  } else {
    save_points(set, output);
  }
  return 0;
}

int do_run(const InstanceOptions& io, const RunOptions& ro, bool compare, std::ostream& out,
           std::ostream& err) {
  const Algorithm algorithm = require_algorithm(ro.algorithm);
  const Instance instance = load_instance(io);
  RunConfig cfg;
  cfg.t = ro.t;
  cfg.start_index = ro.start;
  cfg.seed = io.seed;
  MeasureOptions mo;
  mo.repeats = ro.repeats;
  mo.with_oracle = compare;
  const BenchRecord record = measure(instance.set, instance.descriptor, algorithm, cfg, mo);

  Sink sink(ro.output, out);
  sink.stream() << csv_header() << '\n' << to_csv(record) << '\n';

  if (compare && record.oracle) {
    const double slack = kCompareSlack * std::max(1.0, *record.oracle);
    if (record.estimate > *record.oracle + slack) {
      err << "fastdiam: estimate exceeds exact diameter by " << record.estimate - *record.oracle
          << '\n';
      return 3;
    }
  }
  return 0;
}

int do_bench(const BenchOptions& bo, std::ostream& out, std::ostream& err) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : bo.algorithms) algorithms.push_back(require_algorithm(name));

  std::vector<Instance> instances;
  for (const auto& path : bo.inputs) instances.push_back({load_points(path), path});
  if (bo.inputs.empty()) {
    for (const auto& name : bo.distributions) {
      const Distribution kind = require_distribution(name);
      if (kind == Distribution::WorstCase5) {
        instances.push_back({worst_case_five_points(), std::string(to_string(kind))});
        continue;
      }
      for (std::size_t m : bo.ms) {
        for (std::size_t n : bo.ns) {
          instances.push_back(
              {generate_from(kind, n, m, bo.seed, {}), std::string(to_string(kind))});
        }
      }
    }
  }

  Sink sink(bo.output, out);
  sink.stream() << csv_header() << '\n';
  // The oracle runs once per instance and is shared by its rows.
  const MeasureOptions row_options{bo.repeats, false};
  for (const Instance& instance : instances) {
    std::optional<OracleValue> oracle;
    if (bo.oracle) oracle = exact_oracle(instance.set);

    for (Algorithm algorithm : algorithms) {
      if ((algorithm == Algorithm::CStar2d || algorithm == Algorithm::ExactCalipers2d) &&
          instance.set.dim() != 2) {
        err << "fastdiam: skipping " << to_string(algorithm) << " on " << instance.descriptor
            << " (m = " << instance.set.dim() << ")\n";
        continue;
      }
      const std::vector<std::size_t> ts =
          uses_iterations(algorithm) ? bo.ts : std::vector<std::size_t>{bo.ts.front()};
      for (std::size_t t : ts) {
        RunConfig cfg;
        cfg.t = t;
        cfg.start_index = bo.start;
        cfg.seed = bo.seed;
        BenchRecord record = measure(instance.set, instance.descriptor, algorithm, cfg, row_options);
        if (oracle) {
          record.oracle = oracle->diameter;
          record.oracle_method = oracle->method;
          record.abs_error = oracle->diameter - record.estimate;
          record.ratio = record.estimate > 0.0 ? oracle->diameter / record.estimate : 1.0;
        }
        sink.stream() << to_csv(record) << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and certified-approximate diameters of point sets", "fastdiam"};
  app.require_subcommand(1);

  InstanceOptions gen_instance;
  std::string gen_output;
  auto* gen = app.add_subcommand("generate", "Write a synthetic dataset");
  add_instance_options(gen, gen_instance);
  gen->add_option("--output", gen_output, "Dataset path ('-' or omitted: standard output)");

  InstanceOptions run_instance;
  RunOptions run_options;
  auto* run = app.add_subcommand("run", "Run one algorithm and print a CSV record");
  auto* cmp = app.add_subcommand("compare", "Run one algorithm and an exact oracle");
  for (auto* cmd : {run, cmp}) {
    add_instance_options(cmd, run_instance);
    cmd->add_option("--algorithm", run_options.algorithm,
                    "exact-bf|exact-rc2d|double-sweep|cstar-2d|iterative|randomized")
        ->required();
    cmd->add_option("--t", run_options.t, "Iterations for iterative/randomized")
        ->capture_default_str();
    cmd->add_option("--start", run_options.start, "Index of the initial point")
        ->capture_default_str();
    cmd->add_option("--repeats", run_options.repeats, "Timing repeats (median reported)")
        ->capture_default_str();
    cmd->add_option("--output", run_options.output, "CSV path (default: standard output)");
  }

  BenchOptions bench_options;
  auto* bch = app.add_subcommand("bench", "Sweep algorithms over a matrix of datasets");
  bch->add_option("--input", bench_options.inputs, "Dataset files, comma separated")
      ->delimiter(',');
  bch->add_option("--distribution", bench_options.distributions, "Distributions, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  bch->add_option("--n", bench_options.ns, "Point counts, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  bch->add_option("--m", bench_options.ms, "Dimensions, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  bch->add_option("--algorithm", bench_options.algorithms, "Algorithms, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  bch->add_option("--t", bench_options.ts, "Iteration counts, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  bch->add_option("--seed", bench_options.seed, "Generator and randomized-algorithm seed");
  bch->add_option("--start", bench_options.start, "Index of the initial point");
  bch->add_option("--repeats", bench_options.repeats, "Timing repeats")->capture_default_str();
  bch->add_flag("--oracle", bench_options.oracle, "Also compute the exact diameter");
  bch->add_option("--output", bench_options.output, "CSV path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return do_generate(gen_instance, gen_output, out);
    if (run->parsed()) return do_run(run_instance, run_options, false, out, err);
    if (cmp->parsed()) return do_run(run_instance, run_options, true, out, err);
    if (bch->parsed()) {
      if (bench_options.ts.empty()) throw UsageError("--t needs at least one value");
      return do_bench(bench_options, out, err);
    }
  } catch (const UsageError& e) {
    err << "fastdiam: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "fastdiam: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace fastdiam::bench
