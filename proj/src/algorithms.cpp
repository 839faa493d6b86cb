#include "fastdiam/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fastdiam/errors.hpp"

namespace fastdiam {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kCStar = std::sqrt(5.0 - 2.0 * std::sqrt(3.0));

void require_start(const PointSet& set, std::size_t start, const char* who) {
  if (set.size() < 2) {
    throw UsageError(std::string(who) + ": need at least two points (a singleton has diameter 0)");
  }
  if (start >= set.size()) {
    throw UsageError(std::string(who) + ": start index " + std::to_string(start) +
                     " out of range for " + std::to_string(set.size()) + " points");
  }
}

void require_iterations(const RunConfig& cfg, const char* who) {
  if (cfg.t < 1) throw UsageError(std::string(who) + ": need at least one iteration");
}

void check_line_inputs(std::span<const double> p, std::span<const double> fp, double r_p) {
  if (p.size() != fp.size()) throw UsageError("compute_q: dimension mismatch");
  if (!(r_p > 0.0)) throw DegenerateInputError("compute_q: r_p must be positive");
}

/// Tracks d_max and the index pair that realises it. Only strict improvements
/// replace the running value.
class RunningMax {
 public:
  explicit RunningMax(std::size_t start) : witness_{start, start} {}

  void offer(double d, std::size_t a, std::size_t b) {
    if (d > best_) {
      best_ = d;
      witness_ = {std::min(a, b), std::max(a, b)};
    }
  }

  DiameterEstimate finish(std::uint64_t scans, const EvalCounter& counter) const {
    return {best_, witness_, scans, counter.value()};
  }

 private:
  double best_ = 0.0;
  IndexPair witness_;
};

}  // namespace

double c_star() noexcept { return kCStar; }
double rho_star() noexcept { return kCStar / 2.0; }

std::string_view to_string(Certificate c) noexcept {
  switch (c) {
    case Certificate::OneSweep:
      return "ONE_SWEEP";
    case Certificate::DoubleSweepSqrt3:
      return "DOUBLE_SWEEP_SQRT3";
    case Certificate::RhoStarBall:
      return "RHO_STAR_BALL";
    case Certificate::CStar2d:
      return "C_STAR_2D";
  }
  return "UNKNOWN";
}

std::vector<double> compute_p_prime(std::span<const double> p, std::span<const double> fp,
                                    double r_p, double r_fp) {
  check_line_inputs(p, fp, r_p);
  const double alpha = r_fp / r_p;
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = alpha * p[k] + (1.0 - alpha) * fp[k];
  return out;
}

std::vector<double> compute_q(std::span<const double> p, std::span<const double> fp, double r_p,
                              double r_fp) {
  check_line_inputs(p, fp, r_p);
  const double half_alpha = 0.5 * (r_fp / r_p);
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = half_alpha * p[k] + (1.0 - half_alpha) * fp[k];
  }
  return out;
}

CertifiedBounds double_sweep(const PointSet& set, std::size_t start) {
  require_start(set, start, "double_sweep");
  EvalCounter counter;
  const FarthestResult fp = farthest(set, set[start], counter);
  const FarthestResult fpp = farthest(set, set[fp.index], counter);

  CertifiedBounds out;
  out.lower = fpp.dist;
  const double one_sweep = 2.0 * fp.dist;
  const double sqrt3 = kSqrt3 * fpp.dist;
  if (one_sweep < sqrt3) {
    out.upper = one_sweep;
    out.factor = 2.0;
    out.certificate = Certificate::OneSweep;
  } else {
    out.upper = sqrt3;
    out.factor = kSqrt3;
    out.certificate = Certificate::DoubleSweepSqrt3;
  }
  out.scans = 2;
  out.distance_evaluations = counter.value();
  return out;
}

CertifiedBounds c_star_estimate_2d(const PointSet& set, std::size_t start) {
  if (set.dim() != 2) {
    throw UsageError("c_star_estimate_2d: the c* certificate is only proven for m = 2, got m = " +
                     std::to_string(set.dim()));
  }
  require_start(set, start, "c_star_estimate_2d");

  EvalCounter counter;
  const FarthestResult fp = farthest(set, set[start], counter);
  if (fp.dist == 0.0) throw DegenerateInputError("c_star_estimate_2d: all points coincide");
  const FarthestResult fpp = farthest(set, set[fp.index], counter);
  const std::vector<double> q = compute_q(set[start], set[fp.index], fp.dist, fpp.dist);
  const FarthestResult fq = farthest(set, q, counter);
  const FarthestResult fqq = farthest(set, set[fq.index], counter);

  const double r_p = fp.dist;
  const double r_fp = fpp.dist;
  const double r_q = fq.dist;
  const double r_fq = fqq.dist;

  CertifiedBounds out;
  out.lower = std::max({r_fp, r_fq, r_p, r_q});
  out.factor = kCStar;
  if (r_q <= rho_star() * r_fp) {
    out.upper = 2.0 * r_q;
    out.certificate = Certificate::RhoStarBall;
  } else {
    out.upper = kCStar * std::max(r_fp, r_fq);
    out.certificate = Certificate::CStar2d;
  }
  // The generic sweep bounds stay valid; keep whichever is tightest.
  if (kSqrt3 * r_fp < out.upper) {
    out.upper = kSqrt3 * r_fp;
    out.factor = kSqrt3;
    out.certificate = Certificate::DoubleSweepSqrt3;
  }
  if (2.0 * r_p < out.upper) {
    out.upper = 2.0 * r_p;
    out.factor = 2.0;
    out.certificate = Certificate::OneSweep;
  }
  out.scans = 4;
  out.distance_evaluations = counter.value();
  return out;
}

DiameterEstimate iterative_approx(const PointSet& set, const RunConfig& cfg) {
  require_start(set, cfg.start_index, "iterative_approx");
  require_iterations(cfg, "iterative_approx");

  EvalCounter counter;
  RunningMax d_max(cfg.start_index);
  std::uint64_t scans = 0;
  std::size_t p = cfg.start_index;

  for (std::size_t i = 0; i < cfg.t; ++i) {
    const FarthestResult fp = farthest(set, set[p], counter);
    ++scans;
    // r_p = 0 means every point coincides with p.
    if (fp.dist == 0.0) break;
    d_max.offer(fp.dist, p, fp.index);

    const FarthestResult fpp = farthest(set, set[fp.index], counter);
    ++scans;
    d_max.offer(fpp.dist, fp.index, fpp.index);

    const std::vector<double> q = compute_q(set[p], set[fp.index], fp.dist, fpp.dist);
    const FarthestResult fq = farthest(set, q, counter);
    const FarthestResult fqq = farthest(set, set[fq.index], counter);
    scans += 2;
    d_max.offer(fqq.dist, fq.index, fqq.index);

    p = fqq.index;
  }
  return d_max.finish(scans, counter);
}

DiameterEstimate randomized_approx(const PointSet& set, const RunConfig& cfg) {
  require_start(set, cfg.start_index, "randomized_approx");
  require_iterations(cfg, "randomized_approx");

  std::mt19937_64 rng(cfg.seed);
  EvalCounter counter;
  RunningMax d_max(cfg.start_index);
  std::uint64_t scans = 0;
  std::size_t p = cfg.start_index;
  const std::size_t m = set.dim();
  std::vector<double> q(m);

  for (std::size_t i = 0; i < cfg.t; ++i) {
    const FarthestResult fp = farthest(set, set[p], counter);
    ++scans;
    if (fp.dist == 0.0) break;
    d_max.offer(fp.dist, p, fp.index);

    const auto a = set[p];
    const auto b = set[fp.index];
    for (std::size_t k = 0; k < m; ++k) q[k] = 0.5 * (a[k] + b[k]);

    // d(q, f(q)) is never offered: q lies on segment p f(p), so
    // d(q, f(q)) <= max(d(p, f(q)), d(f(p), f(q))) <= d(f(q), f^2(q)).
    const FarthestResult fq = farthest(set, q, counter);
    const FarthestResult fqq = farthest(set, set[fq.index], counter);
    scans += 2;
    d_max.offer(fqq.dist, fq.index, fqq.index);

    // Top bit of one 64-bit draw per iteration.
    const bool take_fp = (rng() >> 63) != 0;
    p = take_fp ? fp.index : fqq.index;
  }
  return d_max.finish(scans, counter);
}

}  // namespace fastdiam
