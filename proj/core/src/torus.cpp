#include "flatmod/torus.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace flatmod {

CurveClass::CurveClass(std::int64_t m, std::int64_t n) {
  if (m == 0 && n == 0) {
    throw std::invalid_argument("CurveClass: (0, 0) is not an essential curve");
  }
  multiplicity_ = std::gcd(m, n);
  m_ = m / multiplicity_;
  n_ = n / multiplicity_;
}

namespace {

std::complex<double> unit_area_scale(const HPoint& tau, Normalization normalization) {
  if (normalization == Normalization::UnitGenerator) return 1.0;
  return 1.0 / std::sqrt(tau.im());
}

}  // namespace

MarkedTorus::MarkedTorus(const HPoint& tau, Normalization normalization)
    : tau_(tau), normalization_(normalization) {
  const std::complex<double> scale = unit_area_scale(tau, normalization);
  omega1_ = scale;
  omega2_ = tau.value() * scale;

  // Lagrange reduction, tracking integer coordinates of both vectors.
  std::complex<double> b1 = omega1_, b2 = omega2_;
  std::int64_t m1 = 1, n1 = 0, m2 = 0, n2 = 1;
  if (std::norm(b2) < std::norm(b1)) {
    std::swap(b1, b2);
    std::swap(m1, m2);
    std::swap(n1, n2);
  }
  for (int it = 0; it < 10000; ++it) {
    const double mu = std::round((std::conj(b1) * b2).real() / std::norm(b1));
    if (mu != 0.0) {
      const auto k = static_cast<std::int64_t>(mu);
      b2 -= mu * b1;
      m2 -= k * m1;
      n2 -= k * n1;
    }
    if (std::norm(b2) < std::norm(b1)) {
      std::swap(b1, b2);
      std::swap(m1, m2);
      std::swap(n1, n2);
    } else {
      break;
    }
  }
  // Rebuild from integer coordinates so the reduced vectors are lattice
  // vectors to working precision.
  reduced1_ = lattice_vector(m1, n1);
  reduced2_ = lattice_vector(m2, n2);
  reduced1_m_ = m1;
  reduced1_n_ = n1;
}

double MarkedTorus::area() const {
  return std::abs((std::conj(omega1_) * omega2_).imag());
}

MarkedTorus make_torus(const HPoint& tau, Normalization normalization) {
  return MarkedTorus(tau, normalization);
}

double curve_length(const MarkedTorus& torus, const CurveClass& c) {
  return std::abs(torus.lattice_vector(c.m(), c.n()));
}

double torus_distance(const MarkedTorus& torus, std::complex<double> x,
                      std::complex<double> y) {
  const std::complex<double> b1 = torus.reduced1();
  const std::complex<double> b2 = torus.reduced2();
  const std::complex<double> diff = x - y;

  // Coordinates of diff in the reduced basis, by Cramer's rule.
  const double det = b1.real() * b2.imag() - b1.imag() * b2.real();
  const double s = (diff.real() * b2.imag() - diff.imag() * b2.real()) / det;
  const double t = (b1.real() * diff.imag() - b1.imag() * diff.real()) / det;
  const std::complex<double> centered = diff - std::round(s) * b1 - std::round(t) * b2;

  double best = std::numeric_limits<double>::infinity();
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      best = std::min(best, std::norm(centered + static_cast<double>(i) * b1 +
                                      static_cast<double>(j) * b2));
    }
  }
  return std::sqrt(best);
}

SystoleResult systole(const MarkedTorus& torus) {
  return {CurveClass(torus.reduced1_m(), torus.reduced1_n()), std::abs(torus.reduced1())};
}

}  // namespace flatmod
