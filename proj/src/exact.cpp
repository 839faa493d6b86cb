#include "fastdiam/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fastdiam/errors.hpp"

namespace fastdiam {

namespace {

void require_plane(const PointSet& set, const char* who) {
  if (set.dim() != 2) {
    throw UsageError(std::string(who) + ": requires m = 2, got m = " + std::to_string(set.dim()));
  }
}

void require_pair(const PointSet& set, const char* who) {
  if (set.size() < 2) {
    throw UsageError(std::string(who) + ": need at least two points (a singleton has diameter 0)");
  }
}

/// Keeps the largest squared distance, preferring the lexicographically
/// smaller normalised pair on exact ties.
class PairMax {
 public:
  void offer(double sq, std::size_t a, std::size_t b) {
    const IndexPair pair{std::min(a, b), std::max(a, b)};
    if (!seen_ || sq > best_sq_ || (sq == best_sq_ && pair < best_)) {
      best_sq_ = sq;
      best_ = pair;
      seen_ = true;
    }
  }

  ExactResult finish(std::uint64_t comparisons) const {
    return {std::sqrt(best_sq_), best_, comparisons};
  }

 private:
  bool seen_ = false;
  double best_sq_ = 0.0;
  IndexPair best_{0, 0};
};

}  // namespace

ExactResult brute_force_diameter(const PointSet& set) {
  require_pair(set, "brute_force_diameter");
  const std::size_t n = set.size();
  double best_sq = -1.0;
  IndexPair best{0, 1};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto pi = set[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sq = squared_distance(pi, set[j]);
      if (sq > best_sq) {
        best_sq = sq;
        best = {i, j};
      }
    }
  }
  return {std::sqrt(best_sq), best, static_cast<std::uint64_t>(n) * (n - 1) / 2};
}

std::vector<std::size_t> convex_hull_2d(const PointSet& set) {
  require_plane(set, "convex_hull_2d");
  const std::size_t n = set.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto pa = set[a];
    const auto pb = set[b];
    if (pa[0] != pb[0]) return pa[0] < pb[0];
    if (pa[1] != pb[1]) return pa[1] < pb[1];
    return a < b;
  });
  // Coincident points: the lowest index sorts first and survives.
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) {
                            return set[a][0] == set[b][0] && set[a][1] == set[b][1];
                          }),
              order.end());
  if (order.size() < 3) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && predicates::orient2d(set[hull[k - 2]], set[hull[k - 1]], set[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower_size = k + 1;
  for (std::size_t r = order.size() - 1; r-- > 0;) {
    const std::size_t idx = order[r];
    while (k >= lower_size &&
           predicates::orient2d(set[hull[k - 2]], set[hull[k - 1]], set[idx]) <= 0) {
      --k;
    }
    hull[k++] = idx;
  }
  // The last vertex repeats the first.
  hull.resize(k - 1);
  return hull;
}

ExactResult rotating_calipers_diameter_2d(const PointSet& set) {
  require_plane(set, "rotating_calipers_diameter_2d");
  require_pair(set, "rotating_calipers_diameter_2d");

  const std::vector<std::size_t> hull = convex_hull_2d(set);
  const std::size_t h = hull.size();
  if (h == 1) return {0.0, {0, 1}, 0};

  PairMax best;
  std::uint64_t comparisons = 0;
  auto visit = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    best.offer(squared_distance(set[hull[a]], set[hull[b]]), hull[a], hull[b]);
    ++comparisons;
  };

  if (h == 2) {
    visit(0, 1);
    return best.finish(comparisons);
  }

  std::size_t j = 1;
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t ni = (i + 1) % h;
    int s = 0;
    // Advance j while edge j still turns towards edge i's outward side.
    for (std::size_t steps = 0; steps < h; ++steps) {
      const std::size_t nj = (j + 1) % h;
      s = predicates::cross_sign(set[hull[i]], set[hull[ni]], set[hull[j]], set[hull[nj]]);
      if (s <= 0) break;
      j = nj;
    }
    visit(i, j);
    visit(ni, j);
    if (s == 0) {
      // Parallel edges: both endpoints of edge j are antipodal to edge i.
      const std::size_t nj = (j + 1) % h;
      visit(i, nj);
      visit(ni, nj);
    }
  }
  return best.finish(comparisons);
}

}  // namespace fastdiam
