// Exact sign evaluation for small polynomial predicates over doubles.
//
// Every predicate here is a signed sum of coordinate products. Each product
// is split into an exact (product, error) pair with fma, and the terms are
// accumulated into a non-overlapping expansion (Shewchuk-style two-sum
// growth). The sign of the sum is the sign of the largest non-zero component.
// This is exact unless a product overflows or underflows.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "fastdiam/exact.hpp"

namespace fastdiam::predicates {

namespace {

struct Term {
  double a;
  double b;
  int sign;
};

template <std::size_t N>
class Expansion {
 public:
  void add(double x) {
    double q = x;
    std::size_t out = 0;
    for (std::size_t i = 0; i < len_; ++i) {
      const double s = q + parts_[i];
      const double bv = s - q;
      const double err = (q - (s - bv)) + (parts_[i] - bv);
      q = s;
      if (err != 0.0) parts_[out++] = err;
    }
    parts_[out++] = q;
    len_ = out;
  }

  int sign() const {
    for (std::size_t i = len_; i-- > 0;) {
      if (parts_[i] > 0.0) return 1;
      if (parts_[i] < 0.0) return -1;
    }
    return 0;
  }

 private:
  std::array<double, N> parts_{};
  std::size_t len_ = 0;
};

template <std::size_t K>
int exact_sign(const std::array<Term, K>& terms) {
  Expansion<2 * K + 1> e;
  for (const Term& t : terms) {
    const double p = t.a * t.b;
    const double err = std::fma(t.a, t.b, -p);
    if (t.sign > 0) {
      e.add(err);
      e.add(p);
    } else {
      e.add(-err);
      e.add(-p);
    }
  }
  return e.sign();
}

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;

}  // namespace

int orient2d(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  const double left = (a[0] - c[0]) * (b[1] - c[1]);
  const double right = (a[1] - c[1]) * (b[0] - c[0]);
  const double det = left - right;
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;

  // ax*by - ax*cy + bx*cy - bx*ay + cx*ay - cx*by
  const std::array<Term, 6> terms{{
      {a[0], b[1], +1},
      {a[0], c[1], -1},
      {b[0], c[1], +1},
      {b[0], a[1], -1},
      {c[0], a[1], +1},
      {c[0], b[1], -1},
  }};
  return exact_sign(terms);
}

int cross_sign(std::span<const double> a, std::span<const double> b, std::span<const double> c,
               std::span<const double> d) {
  // (bx-ax)(dy-cy) - (by-ay)(dx-cx), fully expanded.
  const std::array<Term, 8> terms{{
      {b[0], d[1], +1},
      {b[0], c[1], -1},
      {a[0], d[1], -1},
      {a[0], c[1], +1},
      {b[1], d[0], -1},
      {b[1], c[0], +1},
      {a[1], d[0], +1},
      {a[1], c[0], -1},
  }};
  return exact_sign(terms);
}

}  // namespace fastdiam::predicates
