#include "flatmod/halfplane.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "flatmod/linmap.hpp"

namespace flatmod {

HPoint::HPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::invalid_argument("HPoint: components must be finite");
  }
  if (!(im > 0.0)) {
    throw std::invalid_argument("HPoint: imaginary part must be positive, got " +
                                std::to_string(im));
  }
}

IntMatrix2::IntMatrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) {
    throw std::invalid_argument("IntMatrix2: determinant must be 1");
  }
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& rhs) const {
  return {a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
          c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_};
}

namespace {

// (az + b)/(cz + d) for ad - bc = det, written so the imaginary part stays
// y * det / |cz + d|^2 with no cancellation.
HPoint apply_fractional_linear(double a, double b, double c, double d, double det,
                               const HPoint& z) {
  const double x = z.re();
  const double y = z.im();
  const double cx_d = c * x + d;
  const double denom = cx_d * cx_d + c * c * y * y;
  const double re = ((a * x + b) * cx_d + a * c * y * y) / denom;
  const double im = y * det / denom;
  return {re, im};
}

}  // namespace

double poincare_distance(const HPoint& z1, const HPoint& z2) {
  // log((|z1 - conj z2| + |z1 - z2|) / (|z1 - conj z2| - |z1 - z2|)) rewritten
  // as 2 asinh(|z1 - z2| / (2 sqrt(y1 y2))), which is stable at both ends.
  const double chord = std::abs(z1.value() - z2.value());
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z1.im() * z2.im())));
}

HPoint mobius_apply(const IntMatrix2& m, const HPoint& z) {
  return apply_fractional_linear(static_cast<double>(m.a()), static_cast<double>(m.b()),
                                 static_cast<double>(m.c()), static_cast<double>(m.d()),
                                 1.0, z);
}

HPoint mobius_apply(const LinearMap2& m, const HPoint& z, double tol) {
  const double det = m.det();
  if (!(std::abs(det - 1.0) <= tol)) {
    throw std::invalid_argument("mobius_apply: matrix is not unimodular");
  }
  return apply_fractional_linear(m.a11(), m.a12(), m.a21(), m.a22(), det, z);
}

bool in_fundamental_domain(const HPoint& z, double tol) {
  return std::abs(z.re()) <= 0.5 + tol && std::norm(z.value()) >= 1.0 - tol;
}

Reduction reduce_to_fundamental_domain(const HPoint& z, int max_iterations) {
  IntMatrix2 witness = IntMatrix2::identity();
  HPoint w = z;
  for (int it = 0; it < max_iterations; ++it) {
    bool moved = false;
    if (std::abs(w.re()) > 0.5) {
      const auto shift = static_cast<std::int64_t>(std::llround(w.re()));
      witness = IntMatrix2::translation(-shift) * witness;
      w = HPoint(w.re() - static_cast<double>(shift), w.im());
      moved = true;
    }
    if (std::norm(w.value()) < 1.0) {
      witness = IntMatrix2::inversion() * witness;
      w = mobius_apply(IntMatrix2::inversion(), w);
      moved = true;
    }
    if (!moved) break;
  }
  // Recompute from the accumulated matrix so the witness reproduces the point.
  return {mobius_apply(witness, z), witness};
}

HPoint geodesic_point(const HPoint& z1, const HPoint& z2, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("geodesic_point: t must lie in [0, 1]");
  }
  if (t == 0.0) return z1;
  if (t == 1.0) return z2;

  // Normalize z1 to i with u = (z - x1)/y1, pass to the disk by the Cayley map
  // and shrink along the ray through the image of z2.
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> u = (z2.value() - z1.re()) / z1.im();
  const std::complex<double> zeta = (u - i) / (u + i);
  const double radius = std::abs(zeta);
  if (radius == 0.0) return z1;
  const double shrunk = std::tanh(t * std::atanh(radius));
  const std::complex<double> zeta_t = zeta * (shrunk / radius);
  const std::complex<double> u_t = i * (1.0 + zeta_t) / (1.0 - zeta_t);
  return HPoint(z1.re() + z1.im() * u_t.real(), z1.im() * u_t.imag());
}

}  // namespace flatmod
