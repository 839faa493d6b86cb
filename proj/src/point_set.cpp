#include "fastdiam/point_set.hpp"

#include <cmath>
#include <string>

#include "fastdiam/errors.hpp"

namespace fastdiam {

PointSet::PointSet(std::size_t n, std::size_t m, std::vector<double> coords)
    : n_(n), m_(m), coords_(std::move(coords)) {
  if (n_ == 0) throw UsageError("PointSet: need at least one point");
  if (m_ == 0) throw UsageError("PointSet: dimension must be at least 1");
  if (coords_.size() != n_ * m_) {
    throw UsageError("PointSet: expected " + std::to_string(n_ * m_) + " coordinates, got " +
                     std::to_string(coords_.size()));
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k])) {
      throw UsageError("PointSet: non-finite coordinate at point " + std::to_string(k / m_) +
                       ", axis " + std::to_string(k % m_));
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw UsageError("PointSet: need at least one point");
  const std::size_t m = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * m);
  for (const auto& row : rows) {
    if (row.size() != m) throw UsageError("PointSet: rows have differing dimensions");
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointSet(rows.size(), m, std::move(coords));
}

namespace {

inline double squared_distance_unchecked(const double* a, const double* b, std::size_t m) {
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw UsageError("distance: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
  return squared_distance_unchecked(a.data(), b.data(), a.size());
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

FarthestResult farthest(const PointSet& set, std::span<const double> query, EvalCounter& counter) {
  const std::size_t n = set.size();
  const std::size_t m = set.dim();
  if (n == 0) throw UsageError("farthest: empty point set");
  if (query.size() != m) {
    throw UsageError("farthest: query has dimension " + std::to_string(query.size()) +
                     ", set has " + std::to_string(m));
  }

  const double* row = set.coords().data();
  const double* q = query.data();
  std::size_t best = 0;
  double best_sq = squared_distance_unchecked(row, q, m);
  for (std::size_t i = 1; i < n; ++i) {
    row += m;
    const double sq = squared_distance_unchecked(row, q, m);
    if (sq > best_sq) {
      best_sq = sq;
      best = i;
    }
  }
  counter.add(n);
  return {best, std::sqrt(best_sq)};
}

FarthestResult farthest(const PointSet& set, std::span<const double> query) {
  EvalCounter scratch;
  return farthest(set, query, scratch);
}

}  // namespace fastdiam
