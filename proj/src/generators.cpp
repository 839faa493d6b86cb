#include "fastdiam/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fastdiam/errors.hpp"

namespace fastdiam {

namespace {

struct NamedDistribution {
  Distribution kind;
  std::string_view name;
};

constexpr std::array<NamedDistribution, 7> kNames{{
    {Distribution::Cube, "cube"},
    {Distribution::Ball, "ball"},
    {Distribution::Sphere, "sphere"},
    {Distribution::Ellipsoid, "ellipsoid"},
    {Distribution::EllipsoidRotated, "ellipsoid-rotated"},
    {Distribution::EllipsoidRegular, "ellipsoid-regular"},
    {Distribution::WorstCase5, "worst-case-5"},
}};

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void validate(const GeneratorSpec& spec) {
  if (spec.kind == Distribution::WorstCase5) return;
  if (spec.n < 1) throw UsageError("generate: n must be at least 1");
  if (spec.m < 1) throw UsageError("generate: m must be at least 1");
  if (!spec.axes.empty()) {
    if (spec.kind != Distribution::Ellipsoid && spec.kind != Distribution::EllipsoidRotated) {
      throw UsageError("generate: axes only apply to ellipsoid and ellipsoid-rotated");
    }
    if (spec.axes.size() != spec.m) {
      throw UsageError("generate: expected " + std::to_string(spec.m) + " axes, got " +
                       std::to_string(spec.axes.size()));
    }
    for (double a : spec.axes) {
      if (!(a > 0.0) || !std::isfinite(a)) {
        throw UsageError("generate: axes must be positive and finite");
      }
    }
  }
}

}  // namespace

std::string_view to_string(Distribution d) noexcept {
  for (const auto& entry : kNames) {
    if (entry.kind == d) return entry.name;
  }
  return "unknown";
}

std::optional<Distribution> parse_distribution(std::string_view name) noexcept {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Sampler::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  // 1 - uniform() lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

void Sampler::unit_vector(std::span<double> out) {
  for (;;) {
    for (double& x : out) x = normal();
    const double len = norm(out);
    if (len > 0.0) {
      for (double& x : out) x /= len;
      return;
    }
  }
}

std::vector<double> default_ellipsoid_axes(std::size_t m) {
  std::vector<double> axes(m);
  for (std::size_t i = 0; i < m; ++i) axes[i] = 1.0 + static_cast<double>(i) / static_cast<double>(m);
  return axes;
}

std::vector<double> random_rotation(std::size_t m, Sampler& sampler) {
  // Column j lives at q[k*m + j].
  std::vector<double> q(m * m);
  for (double& x : q) x = sampler.normal();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t prev = 0; prev < j; ++prev) {
      double dot = 0.0;
      for (std::size_t k = 0; k < m; ++k) dot += q[k * m + j] * q[k * m + prev];
      for (std::size_t k = 0; k < m; ++k) q[k * m + j] -= dot * q[k * m + prev];
    }
    double len = 0.0;
    for (std::size_t k = 0; k < m; ++k) len += q[k * m + j] * q[k * m + j];
    len = std::sqrt(len);
    if (len == 0.0) throw DegenerateInputError("random_rotation: singular Gaussian draw");
    for (std::size_t k = 0; k < m; ++k) q[k * m + j] /= len;
  }
  return q;
}

PointSet worst_case_five_points() {
  const double s3 = std::sqrt(3.0);
  const double x = (1.0 - s3) / 2.0;
  const double y = 0.5;
  return PointSet(5, 2,
                  {
                      -0.5, 0.0,  // p'
                      0.5, 0.0,   // f(p)
                      -x, y,      // f(q)
                      -x, -y,     // q_bar
                      x, y,       // q
                  });
}

PointSet generate(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.kind == Distribution::WorstCase5) return worst_case_five_points();

  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  Sampler sampler(spec.seed);
  std::vector<double> coords(n * m);

  std::vector<double> axes;
  switch (spec.kind) {
    case Distribution::Ellipsoid:
    case Distribution::EllipsoidRotated:
      axes = spec.axes.empty() ? default_ellipsoid_axes(m) : spec.axes;
      break;
    case Distribution::EllipsoidRegular:
      axes.assign(m, 1.0);
      axes.back() = 2.0;
      break;
    default:
      break;
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::span<double> row(coords.data() + i * m, m);
    switch (spec.kind) {
      case Distribution::Cube:
        for (double& x : row) x = sampler.uniform();
        break;
      case Distribution::Ball: {
        sampler.unit_vector(row);
        const double radius = std::pow(sampler.uniform(), 1.0 / static_cast<double>(m));
        for (double& x : row) x *= radius;
        break;
      }
      case Distribution::Sphere:
        sampler.unit_vector(row);
        break;
      default:
        sampler.unit_vector(row);
        for (std::size_t k = 0; k < m; ++k) row[k] *= axes[k];
        break;
    }
  }

  if (spec.kind == Distribution::EllipsoidRotated) {
    const std::vector<double> rot = random_rotation(m, sampler);
    std::vector<double> tmp(m);
    for (std::size_t i = 0; i < n; ++i) {
      double* row = coords.data() + i * m;
      for (std::size_t r = 0; r < m; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < m; ++c) acc += rot[r * m + c] * row[c];
        tmp[r] = acc;
      }
      std::copy(tmp.begin(), tmp.end(), row);
    }
  }
  return PointSet(n, m, std::move(coords));
}

}  // namespace fastdiam
