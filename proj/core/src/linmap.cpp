#include "flatmod/linmap.hpp"

#include <cmath>
#include <stdexcept>

#include "flatmod/torus.hpp"

namespace flatmod {

namespace {

LinearMap2 basis_matrix(const MarkedTorus& t) {
  return {t.omega1().real(), t.omega2().real(), t.omega1().imag(), t.omega2().imag()};
}

}  // namespace

ComplexDerivatives complex_derivatives(const LinearMap2& m) {
  // g_z = ((a11 + a22) + i (a21 - a12)) / 2, g_zbar = ((a11 - a22) + i (a21 + a12)) / 2
  return {0.5 * std::hypot(m.a11() + m.a22(), m.a21() - m.a12()),
          0.5 * std::hypot(m.a11() - m.a22(), m.a21() + m.a12())};
}

SingularValues singular_values(const LinearMap2& m) {
  const auto [dz, dzbar] = complex_derivatives(m);
  return {dz + dzbar, std::abs(dz - dzbar)};
}

LinearMap2 affine_comparison_map(const MarkedTorus& from, const MarkedTorus& to) {
  if (from.normalization() != to.normalization()) {
    throw std::invalid_argument("affine_comparison_map: tori use different normalizations");
  }
  return compose(basis_matrix(to), invert(basis_matrix(from)));
}

double lipschitz_constant(const LinearMap2& m) {
  // Largest eigenvalue of M M^T: (t + sqrt(t^2 - 4 det^2)) / 2 with
  // t = |M|_F^2. The discriminant factors as (t - 2|det|)(t + 2|det|), and both
  // factors are sums of squares.
  const double a = m.a11(), b = m.a12(), c = m.a21(), d = m.a22();
  const double frob = a * a + b * b + c * c + d * d;
  const double plus = (a + d) * (a + d) + (b - c) * (b - c);   // t + 2 det
  const double minus = (a - d) * (a - d) + (b + c) * (b + c);  // t - 2 det
  const double top = 0.5 * (frob + std::sqrt(plus * minus));
  return std::sqrt(top);
}

double standard_form_lipschitz(double c, double d) {
  const double s = d * d + 1.0 / (d * d) + c * c;
  // s - 2 = (d - 1/d)^2 + c^2
  const double s_minus_two = (d - 1.0 / d) * (d - 1.0 / d) + c * c;
  return std::sqrt(0.5 * (s + std::sqrt(s_minus_two * (s + 2.0))));
}

double qc_distortion(const LinearMap2& m) {
  const double det = m.det();
  if (!(det > 0.0)) {
    throw std::domain_error("qc_distortion: map must preserve orientation (det > 0)");
  }
  const auto [dz, dzbar] = complex_derivatives(m);
  // |g_z|^2 - |g_zbar|^2 = det, so (|g_z| + |g_zbar|) / (|g_z| - |g_zbar|)
  // equals (|g_z| + |g_zbar|)^2 / det.
  const double sum = dz + dzbar;
  return sum * sum / det;
}

LinearMap2 invert(const LinearMap2& m) {
  const double det = m.det();
  if (det == 0.0 || !std::isfinite(det)) {
    throw std::domain_error("invert: singular matrix");
  }
  return {m.a22() / det, -m.a12() / det, -m.a21() / det, m.a11() / det};
}

LinearMap2 compose(const LinearMap2& outer, const LinearMap2& inner) {
  return {outer.a11() * inner.a11() + outer.a12() * inner.a21(),
          outer.a11() * inner.a12() + outer.a12() * inner.a22(),
          outer.a21() * inner.a11() + outer.a22() * inner.a21(),
          outer.a21() * inner.a12() + outer.a22() * inner.a22()};
}

}  // namespace flatmod
