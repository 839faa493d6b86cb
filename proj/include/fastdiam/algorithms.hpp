#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fastdiam/point_set.hpp"

namespace fastdiam {

/// Best proven planar approximation factor, sqrt(5 - 2*sqrt(3)) ~ 1.2393.
double c_star() noexcept;
/// Half of c_star(). A farthest radius r_q at or below rho_star() * r_f(p)
/// already pins the diameter under c_star() * r_f(p).
double rho_star() noexcept;

/// Which inequality produced a CertifiedBounds::upper.
enum class Certificate {
  OneSweep,         ///< diam <= 2 r_p
  DoubleSweepSqrt3, ///< diam <= sqrt(3) r_f(p)
  RhoStarBall,      ///< diam <= 2 r_q <= c* r_f(p)   (planar only)
  CStar2d,          ///< diam <= c* max(r_f(p), r_f(q))  (planar only)
};

std::string_view to_string(Certificate c) noexcept;

struct CertifiedBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// Guarantee factor of the certificate that fired: 2, sqrt(3) or c*.
  double factor = 0.0;
  Certificate certificate = Certificate::OneSweep;
  std::uint64_t scans = 0;
  std::uint64_t distance_evaluations = 0;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A certified lower bound on diam(S). `lower` is exactly the distance
/// between the two witness points.
struct DiameterEstimate {
  double lower = 0.0;
  IndexPair witness{0, 0};
  std::uint64_t scans = 0;
  std::uint64_t distance_evaluations = 0;
};

struct RunConfig {
  std::size_t t = 2;
  std::size_t start_index = 0;
  std::uint64_t seed = 0;
};

/// f(p) then f^2(p) from `start`; lower = r_f(p), upper = min(2 r_p, sqrt(3) r_f(p)).
/// Requires n >= 2. A set whose points all coincide yields lower = upper = 0.
CertifiedBounds double_sweep(const PointSet& set, std::size_t start = 0);

/// The point on the line through p and f(p) at distance r_fp from f(p):
/// alpha*p + (1-alpha)*fp with alpha = r_fp / r_p.
std::vector<double> compute_p_prime(std::span<const double> p, std::span<const double> fp,
                                    double r_p, double r_fp);

/// Midpoint of p' and f(p): (alpha/2)*p + (1-alpha/2)*fp.
std::vector<double> compute_q(std::span<const double> p, std::span<const double> fp, double r_p,
                              double r_fp);

/// Four-scan planar estimate carrying the c* certificate. Throws UsageError
/// unless m == 2 and n >= 2, and DegenerateInputError if every point coincides.
CertifiedBounds c_star_estimate_2d(const PointSet& set, std::size_t start = 0);

/// Fixed-iteration farthest-point refinement. Each iteration scans for f(p),
/// f^2(p), f(q), f^2(q) with q = compute_q(p, f(p), ...), then continues from
/// p = f^2(q). Costs 4*t*n distance evaluations.
DiameterEstimate iterative_approx(const PointSet& set, const RunConfig& cfg = {});

/// Randomized variant. q is the plain midpoint of p and f(p); the next p is
/// f(p) or f^2(q) by a fair coin drawn from a generator seeded with cfg.seed.
/// Costs 3*t*n distance evaluations.
DiameterEstimate randomized_approx(const PointSet& set, const RunConfig& cfg = {});

}  // namespace fastdiam
