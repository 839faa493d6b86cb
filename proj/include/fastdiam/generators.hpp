#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "fastdiam/point_set.hpp"

namespace fastdiam {

enum class Distribution {
  Cube,              ///< uniform in [0,1]^m
  Ball,              ///< uniform in the unit ball
  Sphere,            ///< uniform on the unit sphere
  Ellipsoid,         ///< sphere sample scaled per axis
  EllipsoidRotated,  ///< Ellipsoid followed by a random rotation
  EllipsoidRegular,  ///< axes (1, ..., 1, 2)
  WorstCase5,        ///< the fixed five-point planar worst case
};

std::string_view to_string(Distribution d) noexcept;
/// Accepts the names printed by to_string (e.g. "ellipsoid-rotated").
std::optional<Distribution> parse_distribution(std::string_view name) noexcept;

struct GeneratorSpec {
  Distribution kind = Distribution::Cube;
  std::size_t n = 1;
  std::size_t m = 1;
  /// Semi-axis lengths for Ellipsoid / EllipsoidRotated. Empty selects the
  /// default a_i = 1 + i/m for i = 0..m-1.
  std::vector<double> axes;
  std::uint64_t seed = 0;
};

/// Deterministic sampler: std::mt19937_64 for the raw stream, 53-bit
/// uniforms from the top bits, Box-Muller for normals. Output depends only
/// on the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform direction in R^m.
  void unit_vector(std::span<double> out);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::vector<double> default_ellipsoid_axes(std::size_t m);

/// Points drawn from `spec`. Same spec, same points. Throws UsageError on an
/// invalid spec.
PointSet generate(const GeneratorSpec& spec);

/// Five planar points attaining the c* worst case, in this row order:
/// p' = (-1/2, 0), f(p) = (1/2, 0), f(q) = (-x, y), q_bar = (-x, -y),
/// q = (x, y), with x = (1 - sqrt 3)/2, y = 1/2.
PointSet worst_case_five_points();

/// Row-major m x m orthogonal matrix from Gram-Schmidt on Gaussian columns.
std::vector<double> random_rotation(std::size_t m, Sampler& sampler);

}  // namespace fastdiam
