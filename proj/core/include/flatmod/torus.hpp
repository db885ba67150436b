#pragma once

#include <complex>
#include <cstdint>

#include "flatmod/halfplane.hpp"

namespace flatmod {

enum class Normalization {
  UnitArea,       // basis 1/sqrt(Im tau), tau/sqrt(Im tau)
  UnitGenerator,  // basis 1, tau
};

/// A primitive lattice direction m*omega1 + n*omega2, naming the free homotopy
/// class of a simple closed curve.
class CurveClass {
 public:
  /// Non-primitive input is divided by gcd(|m|, |n|); was_reduced() records it.
  /// Throws std::invalid_argument for (0, 0).
  CurveClass(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  /// The gcd that was divided out (1 for primitive input).
  std::int64_t multiplicity() const { return multiplicity_; }
  bool was_reduced() const { return multiplicity_ != 1; }

  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  std::int64_t m_;
  std::int64_t n_;
  std::int64_t multiplicity_;
};

/// A flat torus C / (Z omega1 + Z omega2) with its marking carried by the
/// ordered basis.
class MarkedTorus {
 public:
  MarkedTorus(const HPoint& tau, Normalization normalization);

  const HPoint& tau() const { return tau_; }
  Normalization normalization() const { return normalization_; }
  std::complex<double> omega1() const { return omega1_; }
  std::complex<double> omega2() const { return omega2_; }

  /// |Im(conj(omega1) omega2)|
  double area() const;

  /// m*omega1 + n*omega2.
  std::complex<double> lattice_vector(std::int64_t m, std::int64_t n) const {
    return static_cast<double>(m) * omega1_ + static_cast<double>(n) * omega2_;
  }

  /// Lagrange-reduced basis of the same lattice: |b1| <= |b2|, |Re(b2/b1)| <= 1/2.
  std::complex<double> reduced1() const { return reduced1_; }
  std::complex<double> reduced2() const { return reduced2_; }
  /// Integer coordinates (m, n) of reduced1() in the marked basis.
  std::int64_t reduced1_m() const { return reduced1_m_; }
  std::int64_t reduced1_n() const { return reduced1_n_; }

 private:
  HPoint tau_;
  Normalization normalization_;
  std::complex<double> omega1_;
  std::complex<double> omega2_;
  std::complex<double> reduced1_;
  std::complex<double> reduced2_;
  // Integer coordinates of reduced1_ in the marked basis.
  std::int64_t reduced1_m_ = 1;
  std::int64_t reduced1_n_ = 0;
};

MarkedTorus make_torus(const HPoint& tau, Normalization normalization);

/// Length of the geodesic representative: |m omega1 + n omega2|.
double curve_length(const MarkedTorus& torus, const CurveClass& c);

/// Quotient flat distance min over lattice vectors l of |x - y + l|.
double torus_distance(const MarkedTorus& torus, std::complex<double> x,
                      std::complex<double> y);

struct SystoleResult {
  CurveClass curve;
  double length;
};

/// Shortest essential closed curve.
SystoleResult systole(const MarkedTorus& torus);

}  // namespace flatmod
