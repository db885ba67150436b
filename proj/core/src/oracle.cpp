#include "flatmod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace flatmod::oracle {

void SamplingConfig::validate() const {
  if (grid_n < 2) throw std::invalid_argument("SamplingConfig: grid_n must be >= 2");
  if (direction_samples < 4) {
    throw std::invalid_argument("SamplingConfig: direction_samples must be >= 4");
  }
  if (path_samples < 2) throw std::invalid_argument("SamplingConfig: path_samples must be >= 2");
  if (random_pairs < 1) throw std::invalid_argument("SamplingConfig: random_pairs must be >= 1");
}

double sampled_lipschitz(const PointMap& f, const MarkedTorus& from, const MarkedTorus& to,
                         const SamplingConfig& cfg) {
  cfg.validate();

  const std::complex<double> origin = f(0.0);
  const double scale = std::max(std::abs(to.omega1()), std::abs(to.omega2()));
  for (const auto corner : {from.omega1(), from.omega2(), from.omega1() + from.omega2()}) {
    if (torus_distance(to, f(corner), origin) > 1e-9 * scale) {
      throw std::invalid_argument(
          "sampled_lipschitz: map does not respect the lattice identifications");
    }
  }

  const int n = cfg.grid_n;
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::complex<double>> points(count);
  std::vector<std::complex<double>> images(count);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      points[k] = (static_cast<double>(i) / n) * from.omega1() +
                  (static_cast<double>(j) / n) * from.omega2();
      images[k] = f(points[k]);
    }
  }

  double best = 0.0;
  auto visit = [&](std::size_t p, std::size_t q) {
    const double d_from = torus_distance(from, points[p], points[q]);
    if (d_from <= 0.0) return;
    best = std::max(best, torus_distance(to, images[p], images[q]) / d_from);
  };

  if (n <= cfg.exhaustive_grid_limit) {
    for (std::size_t p = 0; p < count; ++p) {
      for (std::size_t q = p + 1; q < count; ++q) visit(p, q);
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    for (std::int64_t k = 0; k < cfg.random_pairs; ++k) {
      const std::size_t p = pick(rng);
      const std::size_t q = pick(rng);
      if (p != q) visit(p, q);
    }
  }
  return best;
}

double direction_sampled_norm(const LinearMap2& m, const SamplingConfig& cfg) {
  cfg.validate();
  double best = 0.0;
  for (int k = 0; k < cfg.direction_samples; ++k) {
    const double theta = std::numbers::pi * k / cfg.direction_samples;
    best = std::max(best, std::abs(m({std::cos(theta), std::sin(theta)})));
  }
  return best;
}

double hyperbolic_path_length(const HPoint& z1, const HPoint& z2, const ConformalWeight& weight,
                              const SamplingConfig& cfg) {
  cfg.validate();
  if (z1 == z2) return 0.0;

  const int segments = cfg.path_samples - 1;
  std::vector<std::complex<double>> path(cfg.path_samples);

  const double height = std::max(z1.im(), z2.im());
  if (std::abs(z1.re() - z2.re()) <= 1e-13 * height) {
    for (int k = 0; k <= segments; ++k) {
      const double s = static_cast<double>(k) / segments;
      path[k] = {z1.re(), z1.im() + s * (z2.im() - z1.im())};
    }
  } else {
    const double center =
        (std::norm(z2.value()) - std::norm(z1.value())) / (2.0 * (z2.re() - z1.re()));
    const double radius = std::abs(z1.value() - center);
    const double phi1 = std::arg(z1.value() - center);
    const double phi2 = std::arg(z2.value() - center);
    for (int k = 0; k <= segments; ++k) {
      const double phi = phi1 + (phi2 - phi1) * static_cast<double>(k) / segments;
      path[k] = {center + radius * std::cos(phi), radius * std::sin(phi)};
    }
  }
  path.front() = z1.value();
  path.back() = z2.value();

  double length = 0.0;
  double prev = std::sqrt(weight(HPoint(path[0])));
  for (int k = 1; k <= segments; ++k) {
    const double cur = std::sqrt(weight(HPoint(path[k])));
    length += 0.5 * (prev + cur) * std::abs(path[k] - path[k - 1]);
    prev = cur;
  }
  return length;
}

double poincare_weight(const HPoint& z) { return 1.0 / (z.im() * z.im()); }

double weil_petersson_weight(const HPoint& z) { return 0.5 / (z.im() * z.im()); }

}  // namespace flatmod::oracle
