#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fastdiam/algorithms.hpp"
#include "fastdiam/point_set.hpp"

namespace fastdiam {

/// Ground-truth diameter with the pair that attains it.
struct ExactResult {
  double diameter = 0.0;
  IndexPair witness{0, 0};
  /// Number of point pairs whose distance was evaluated.
  std::uint64_t comparisons = 0;
};

/// Max over all n(n-1)/2 pairs. Ties resolve to the lexicographically
/// smallest (i, j), i < j. Requires n >= 2.
ExactResult brute_force_diameter(const PointSet& set);

/// Convex hull of a planar set as indices in counter-clockwise order,
/// starting from the lexicographically smallest (x, y) vertex. Collinear
/// boundary points are dropped, coincident points collapse to the lowest
/// index. Requires m == 2.
std::vector<std::size_t> convex_hull_2d(const PointSet& set);

/// Exact planar diameter from antipodal pairs of the convex hull. Requires
/// m == 2 and n >= 2.
ExactResult rotating_calipers_diameter_2d(const PointSet& set);

namespace predicates {

/// Sign of the orientation determinant of (a, b, c): +1 for a left turn
/// (counter-clockwise), -1 for a right turn, 0 when collinear. Exact for all
/// finite double inputs.
int orient2d(std::span<const double> a, std::span<const double> b, std::span<const double> c);

/// Exact sign of cross(b - a, d - c).
int cross_sign(std::span<const double> a, std::span<const double> b, std::span<const double> c,
               std::span<const double> d);

}  // namespace predicates

}  // namespace fastdiam
