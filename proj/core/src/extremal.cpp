#include "flatmod/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "flatmod/torus.hpp"

namespace flatmod {

ParamCheck validate_params(double r, double eps, double delta) {
  auto fail = [](const std::string& why) { return ParamCheck{false, why}; };
  if (!std::isfinite(r) || !std::isfinite(eps) || !std::isfinite(delta)) {
    return fail("parameters must be finite");
  }
  if (!(r > 1.0)) return fail("r > 1 is required");
  if (!(eps > -0.5 && eps < 0.5)) return fail("eps must lie in (-1/2, 1/2)");

  const double lower = std::max(0.0, 1.0 / r - r / 2.0 + eps * r);
  const double upper = std::min(1.0 / r, r / 2.0 + eps * r);
  std::ostringstream os;
  if (!(delta > lower)) {
    os << "delta must exceed max(0, 1/r - r/2 + eps*r) = " << lower;
    return fail(os.str());
  }
  if (!(delta < upper)) {
    os << "delta must be below min(1/r, r/2 + eps*r) = " << upper;
    return fail(os.str());
  }
  return {true, {}};
}

PiecewiseStretchMap::PiecewiseStretchMap(double r, double eps, double delta)
    : r_(r), eps_(eps), delta_(delta) {
  if (const auto check = validate_params(r, eps, delta); !check) {
    throw std::invalid_argument("PiecewiseStretchMap: " + check.reason);
  }
}

LinearMap2 PiecewiseStretchMap::bottom_block() const {
  return LinearMap2::diagonal(r_, (1.0 / r_ - delta_) / (0.5 - eps_));
}

LinearMap2 PiecewiseStretchMap::top_block() const {
  return LinearMap2::diagonal(r_, delta_ / (0.5 + eps_));
}

std::complex<double> PiecewiseStretchMap::evaluate(std::complex<double> p) const {
  const double x = p.real();
  const double y = p.imag();
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw std::out_of_range("PiecewiseStretchMap: point outside the unit square");
  }
  const double seam_height = 1.0 / r_ - delta_;
  if (y <= seam()) {
    return {r_ * x, seam_height * y / seam()};
  }
  return {r_ * x, seam_height + delta_ * (y - seam()) / (0.5 + eps_)};
}

double family_lipschitz_constant(const PiecewiseStretchMap& f) {
  const LinearMap2 bottom = f.bottom_block();
  const LinearMap2 top = f.top_block();
  return std::max({bottom.a11(), bottom.a22(), top.a11(), top.a22()});
}

double family_qc_distortion(const PiecewiseStretchMap& f) {
  return std::max(qc_distortion(f.bottom_block()), qc_distortion(f.top_block()));
}

double sampled_family_lipschitz(const PiecewiseStretchMap& f, const oracle::SamplingConfig& cfg) {
  // Square torus is tau = i; the rectangle [0,r] x [0,1/r] is the unit-area
  // torus at tau = i / r^2.
  const MarkedTorus square(HPoint(0.0, 1.0), Normalization::UnitArea);
  const MarkedTorus rectangle(HPoint(0.0, 1.0 / (f.r() * f.r())), Normalization::UnitArea);
  return oracle::sampled_lipschitz([&f](std::complex<double> p) { return f.evaluate(p); },
                                   square, rectangle, cfg);
}

double sampled_family_lipschitz(const PiecewiseStretchMap& f, int grid_n) {
  oracle::SamplingConfig cfg;
  cfg.grid_n = grid_n;
  return sampled_family_lipschitz(f, cfg);
}

}  // namespace flatmod
