#pragma once

#include <complex>
#include <cstdint>
#include <utility>

namespace flatmod {

class LinearMap2;

inline constexpr double kDefaultTolerance = 1e-12;

/// A point of the upper half-plane. Each point names one marked flat torus.
class HPoint {
 public:
  /// Throws std::invalid_argument unless both parts are finite and im > 0.
  HPoint(double re, double im);
  explicit HPoint(std::complex<double> z) : HPoint(z.real(), z.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> value() const { return {re_, im_}; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  double re_;
  double im_;
};

/// Element of SL(2,Z): [[a, b], [c, d]] with ad - bc = 1.
class IntMatrix2 {
 public:
  /// Throws std::invalid_argument if the determinant is not exactly 1.
  IntMatrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }
  /// z -> z + k
  static IntMatrix2 translation(std::int64_t k) { return {1, k, 0, 1}; }
  /// z -> -1/z
  static IntMatrix2 inversion() { return {0, -1, 1, 0}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  IntMatrix2 operator*(const IntMatrix2& rhs) const;
  IntMatrix2 inverse() const { return {d_, -b_, -c_, a_}; }

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Hyperbolic distance for the metric |dz|^2 / (Im z)^2.
double poincare_distance(const HPoint& z1, const HPoint& z2);

/// Fractional linear action z -> (az + b) / (cz + d).
HPoint mobius_apply(const IntMatrix2& m, const HPoint& z);

/// Real SL(2,R) action. Throws std::invalid_argument when |det - 1| > tol.
HPoint mobius_apply(const LinearMap2& m, const HPoint& z,
                    double tol = kDefaultTolerance);

struct Reduction {
  HPoint point;
  IntMatrix2 witness;  // mobius_apply(witness, input) == point
};

/// Moves z into the closed modular fundamental domain |Re w| <= 1/2, |w| >= 1
/// by alternating integer translation and inversion. Boundary points are not
/// canonicalized.
Reduction reduce_to_fundamental_domain(const HPoint& z, int max_iterations = 10000);

/// True if |Re z| <= 1/2 and |z| >= 1, up to tol.
bool in_fundamental_domain(const HPoint& z, double tol = kDefaultTolerance);

/// Point at fraction t of the hyperbolic distance from z1 toward z2, on the
/// geodesic through them. Throws std::invalid_argument if t is outside [0, 1].
HPoint geodesic_point(const HPoint& z1, const HPoint& z2, double t);

}  // namespace flatmod
