#pragma once

#include <complex>

namespace flatmod {

class MarkedTorus;

/// Real 2x2 matrix acting on R^2 = C, x + iy -> (a11 x + a12 y) + i (a21 x + a22 y).
class LinearMap2 {
 public:
  constexpr LinearMap2(double a11, double a12, double a21, double a22)
      : a11_(a11), a12_(a12), a21_(a21), a22_(a22) {}

  static constexpr LinearMap2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr LinearMap2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
  /// The map x + iy -> x/d + c y + i d y.
  static constexpr LinearMap2 standard_form(double c, double d) {
    return {1.0 / d, c, 0.0, d};
  }

  constexpr double a11() const { return a11_; }
  constexpr double a12() const { return a12_; }
  constexpr double a21() const { return a21_; }
  constexpr double a22() const { return a22_; }
  constexpr double det() const { return a11_ * a22_ - a12_ * a21_; }

  std::complex<double> operator()(std::complex<double> z) const {
    return {a11_ * z.real() + a12_ * z.imag(), a21_ * z.real() + a22_ * z.imag()};
  }

  friend constexpr bool operator==(const LinearMap2&, const LinearMap2&) = default;

 private:
  double a11_, a12_, a21_, a22_;
};

/// Magnitudes of the Wirtinger derivatives |g_z| and |g_zbar| of a linear map.
struct ComplexDerivatives {
  double dz;
  double dzbar;
};

struct SingularValues {
  double max;
  double min;
};

ComplexDerivatives complex_derivatives(const LinearMap2& m);

/// Singular values via |g_z| +- |g_zbar|.
SingularValues singular_values(const LinearMap2& m);

/// The unique linear map sending omega1(from) -> omega1(to) and
/// omega2(from) -> omega2(to). Throws std::invalid_argument if the tori use
/// different normalizations.
LinearMap2 affine_comparison_map(const MarkedTorus& from, const MarkedTorus& to);

/// Operator norm sup |Mv|/|v|, from the largest eigenvalue of M M^T.
double lipschitz_constant(const LinearMap2& m);

/// Closed form for the operator norm of standard_form(c, d):
/// sqrt((d^2 + d^-2 + c^2 + sqrt((d^2 + d^-2 + c^2)^2 - 4)) / 2).
double standard_form_lipschitz(double c, double d);

/// K = (|g_z| + |g_zbar|) / (|g_z| - |g_zbar|). Throws std::domain_error
/// unless det > 0.
double qc_distortion(const LinearMap2& m);

/// Throws std::domain_error for a singular matrix.
LinearMap2 invert(const LinearMap2& m);

/// (outer o inner)(z) = outer(inner(z)).
LinearMap2 compose(const LinearMap2& outer, const LinearMap2& inner);

inline LinearMap2 operator*(const LinearMap2& lhs, const LinearMap2& rhs) {
  return compose(lhs, rhs);
}

}  // namespace flatmod
