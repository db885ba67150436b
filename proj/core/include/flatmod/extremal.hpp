#pragma once

#include <complex>
#include <string>

#include "flatmod/linmap.hpp"
#include "flatmod/oracle.hpp"

namespace flatmod {

struct ParamCheck {
  bool valid;
  std::string reason;  // empty when valid

  explicit operator bool() const { return valid; }
};

/// Checks r > 1, eps in (-1/2, 1/2) and
/// max(0, 1/r - r/2 + eps r) < delta < min(1/r, r/2 + eps r).
ParamCheck validate_params(double r, double eps, double delta);

/// Homeomorphism of the square torus [0,1]^2 onto the rectangular torus
/// [0,r] x [0,1/r] that is linear (factor r) horizontally and piecewise
/// linear vertically, with a seam at y = 1/2 - eps mapped to 1/r - delta.
/// Every member has Lipschitz constant r, the same as the affine map
/// diag(r, 1/r).
class PiecewiseStretchMap {
 public:
  /// Throws std::invalid_argument naming the violated constraint.
  PiecewiseStretchMap(double r, double eps, double delta);

  /// The affine member eps = 0, delta = 1/(2r).
  static PiecewiseStretchMap affine(double r) { return {r, 0.0, 0.5 / r}; }

  double r() const { return r_; }
  double eps() const { return eps_; }
  double delta() const { return delta_; }

  double seam() const { return 0.5 - eps_; }

  /// Derivative on y <= seam(): diag(r, (1/r - delta) / (1/2 - eps)).
  LinearMap2 bottom_block() const;
  /// Derivative on y >= seam(): diag(r, delta / (1/2 + eps)).
  LinearMap2 top_block() const;

  /// Throws std::out_of_range for points outside the closed unit square.
  std::complex<double> evaluate(std::complex<double> p) const;

 private:
  double r_;
  double eps_;
  double delta_;
};

/// Largest diagonal entry over both blocks.
double family_lipschitz_constant(const PiecewiseStretchMap& f);

/// Largest qc_distortion over both blocks. Equals r^2 exactly when
/// delta = (1/2 + eps) / r, where the member coincides with the affine map,
/// and exceeds r^2 everywhere else.
double family_qc_distortion(const PiecewiseStretchMap& f);

/// Grid estimate of the Lipschitz constant between the quotient tori. Always
/// a lower bound for family_lipschitz_constant.
double sampled_family_lipschitz(const PiecewiseStretchMap& f, int grid_n);
double sampled_family_lipschitz(const PiecewiseStretchMap& f, const oracle::SamplingConfig& cfg);

}  // namespace flatmod
