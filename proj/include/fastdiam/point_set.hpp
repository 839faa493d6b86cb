#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fastdiam {

/// A finite set of n points in R^m, stored row-major in one contiguous block.
///
/// Coordinates are validated once (finite, uniform dimension) at construction
/// and never change afterwards, so a PointSet can be shared freely between
/// threads while queries run.
class PointSet {
 public:
  /// `coords` holds n*m values; point i occupies [i*m, (i+1)*m).
  PointSet(std::size_t n, std::size_t m, std::vector<double> coords);

  /// Convenience for tests and small literals. All rows must have equal length.
  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_; }

  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * m_, m_};
  }
  std::span<const double> operator[](std::size_t i) const noexcept { return point(i); }

  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> coords_;
};

/// Counts full m-coordinate distance evaluations. A farthest-point scan over
/// a set of n points advances it by exactly n. Safe to share across threads.
class EvalCounter {
 public:
  EvalCounter() = default;
  EvalCounter(const EvalCounter&) = delete;
  EvalCounter& operator=(const EvalCounter&) = delete;

  void add(std::uint64_t k) noexcept { count_.fetch_add(k, std::memory_order_relaxed); }
  std::uint64_t value() const noexcept { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

struct FarthestResult {
  std::size_t index = 0;
  double dist = 0.0;
};

/// Sum of squared coordinate differences. Throws UsageError on dimension mismatch.
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Euclidean distance. Throws UsageError on dimension mismatch.
double distance(std::span<const double> a, std::span<const double> b);

/// Farthest point of `set` from `query` (which need not belong to the set).
///
/// Candidates are compared by squared distance with exact floating-point
/// comparison; ties go to the lowest index. The square root is taken once,
/// for the winner.
FarthestResult farthest(const PointSet& set, std::span<const double> query, EvalCounter& counter);
FarthestResult farthest(const PointSet& set, std::span<const double> query);

}  // namespace fastdiam
