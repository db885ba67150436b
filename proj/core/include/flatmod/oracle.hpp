#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "flatmod/halfplane.hpp"
#include "flatmod/linmap.hpp"
#include "flatmod/torus.hpp"

// Brute-force estimators. None of these call the closed forms they are used to
// check; sampled suprema are lower bounds, path lengths are quadratures.
namespace flatmod::oracle {

struct SamplingConfig {
  int grid_n = 200;               // samples per lattice direction
  int direction_samples = 100000;
  int path_samples = 10000;
  std::uint64_t seed = 20240611;
  // All grid pairs are evaluated up to this grid_n; above it, random_pairs
  // seeded pairs are drawn instead.
  int exhaustive_grid_limit = 60;
  std::int64_t random_pairs = 1000000;

  /// Throws std::invalid_argument if any count is below its minimum.
  void validate() const;
};

using PointMap = std::function<std::complex<double>(std::complex<double>)>;

/// Conformal factor w(z) of a metric ds^2 = w(z) |dz|^2.
using ConformalWeight = std::function<double(const HPoint&)>;

/// Largest ratio d_to(f(x), f(y)) / d_from(x, y) over grid points
/// x = (i/n) omega1 + (j/n) omega2 of the fundamental parallelogram of
/// `from`. Throws std::invalid_argument if f does not send the parallelogram
/// corners to one point of the quotient `to`.
double sampled_lipschitz(const PointMap& f, const MarkedTorus& from, const MarkedTorus& to,
                         const SamplingConfig& cfg = {});

/// max |M v| over direction_samples unit vectors evenly spaced in [0, pi).
double direction_sampled_norm(const LinearMap2& m, const SamplingConfig& cfg = {});

/// Trapezoid-rule length of the hyperbolic geodesic from z1 to z2 under
/// ds^2 = weight(z) |dz|^2. The geodesic is parametrized by Euclidean height on
/// vertical lines and by polar angle on semicircles.
double hyperbolic_path_length(const HPoint& z1, const HPoint& z2, const ConformalWeight& weight,
                              const SamplingConfig& cfg = {});

/// 1 / y^2
double poincare_weight(const HPoint& z);

/// 1 / (2 y^2)
double weil_petersson_weight(const HPoint& z);

}  // namespace flatmod::oracle
