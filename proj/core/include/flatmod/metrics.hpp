#pragma once

#include "flatmod/halfplane.hpp"
#include "flatmod/torus.hpp"

namespace flatmod {

inline constexpr int kDefaultCurveBound = 500;

/// Thurston's Lipschitz distance between unit-area marked tori: log of the
/// operator norm of the affine comparison map.
double lambda_metric(const HPoint& t1, const HPoint& t2);

/// Half the log of the distortion of the affine comparison map.
double teichmuller_metric(const HPoint& t1, const HPoint& t2);

/// Largest length ratio over primitive classes with max(|m|, |n|) <= bound.
struct CurveStretch {
  double log_ratio;
  CurveClass witness;
};

/// Enumerates every primitive (m, n) with max(|m|, |n|) <= bound, one per
/// +- pair, and returns log max curve_length(to, c) / curve_length(from, c).
/// Ties go to the smallest |m| + |n|, then the smallest (|n|, |m|), then the
/// larger m. The search may be split across `parts` threads; the result does
/// not depend on the split. Throws std::invalid_argument if bound < 1 or
/// parts < 1.
CurveStretch max_curve_stretch(const MarkedTorus& from, const MarkedTorus& to, int bound,
                               int parts = 1);

struct KappaResult {
  double value;
  CurveClass witness;  // best class found; approached rather than attained when !attained
  double gap;     // lambda_metric - value
  bool attained;  // gap within kDefaultTolerance
};

/// Curve-ratio distance on unit-area tori truncated to the box |m|, |n| <= bound.
KappaResult kappa_metric(const HPoint& t1, const HPoint& t2, int bound = kDefaultCurveBound,
                         int parts = 1);

/// Curve-ratio quantity for lattices Z + tau Z. Not symmetric.
double kappa_prime(const HPoint& t1, const HPoint& t2, int bound = kDefaultCurveBound);

/// max of the two kappa_prime directions.
double sorvali_dilatation(const HPoint& t1, const HPoint& t2, int bound = kDefaultCurveBound);

/// Average of the two kappa_prime directions.
double s_kappa_prime(const HPoint& t1, const HPoint& t2, int bound = kDefaultCurveBound);

/// Conformal factor 1 / (2 Im(t)^2) of the genus-one Weil-Petersson metric.
double wp_tensor(const HPoint& t);

/// Poincare distance scaled by 1/sqrt(2).
double wp_distance(const HPoint& t1, const HPoint& t2);

/// Whether d <= D <= 2d holds for the dilatation metric d and
/// D = log K (log_k) or D = (1/2) log K (half_log_k).
struct SorvaliCheck {
  bool log_k;
  bool half_log_k;
};

SorvaliCheck sorvali_inequality(double dilatation, double teichmuller, double tol = 1e-9);

struct MetricReport {
  HPoint tau_from;
  HPoint tau_to;
  int bound;
  double lambda;
  double teich;
  double kappa_enumerated;
  CurveClass kappa_witness;
  double kappa_gap;
  bool kappa_attained;
  double kappa_prime_fwd;
  double kappa_prime_rev;
  double sorvali_d;
  double s_kappa_prime;
  double wp;
  double poincare;
  SorvaliCheck sorvali;
};

MetricReport full_report(const HPoint& t1, const HPoint& t2, int bound = kDefaultCurveBound,
                         int parts = 1);

}  // namespace flatmod
