#include "flatmod/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "flatmod/linmap.hpp"

namespace flatmod {

namespace {

LinearMap2 unit_area_comparison(const HPoint& t1, const HPoint& t2) {
  return affine_comparison_map(MarkedTorus(t1, Normalization::UnitArea),
                               MarkedTorus(t2, Normalization::UnitArea));
}

struct Candidate {
  double ratio_sq = -1.0;
  std::int64_t m = 1;
  std::int64_t n = 0;
};

// Total order: larger ratio first, then the tie-break on (m, n).
bool better(const Candidate& a, const Candidate& b) {
  if (a.ratio_sq != b.ratio_sq) return a.ratio_sq > b.ratio_sq;
  const auto key = [](const Candidate& c) {
    return std::make_tuple(std::abs(c.m) + std::abs(c.n), std::abs(c.n), std::abs(c.m), -c.m);
  };
  return key(a) < key(b);
}

Candidate scan_rows(const MarkedTorus& from, const MarkedTorus& to, int bound, int row_begin,
                    int row_end) {
  Candidate best;
  for (int n = row_begin; n < row_end; ++n) {
    const int m_begin = n == 0 ? 1 : -bound;
    const int m_end = n == 0 ? 1 : bound;
    for (int m = m_begin; m <= m_end; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const double num = std::norm(to.lattice_vector(m, n));
      const double den = std::norm(from.lattice_vector(m, n));
      const Candidate c{num / den, m, n};
      if (better(c, best)) best = c;
    }
  }
  return best;
}

}  // namespace

double lambda_metric(const HPoint& t1, const HPoint& t2) {
  return std::log(lipschitz_constant(unit_area_comparison(t1, t2)));
}

double teichmuller_metric(const HPoint& t1, const HPoint& t2) {
  return 0.5 * std::log(qc_distortion(unit_area_comparison(t1, t2)));
}

CurveStretch max_curve_stretch(const MarkedTorus& from, const MarkedTorus& to, int bound,
                               int parts) {
  if (bound < 1) throw std::invalid_argument("max_curve_stretch: bound must be >= 1");
  if (parts < 1) throw std::invalid_argument("max_curve_stretch: parts must be >= 1");

  const int rows = bound + 1;
  parts = std::min(parts, rows);
  Candidate best;
  if (parts == 1) {
    best = scan_rows(from, to, bound, 0, rows);
  } else {
    std::vector<std::future<Candidate>> futures;
    for (int p = 0; p < parts; ++p) {
      const int begin = rows * p / parts;
      const int end = rows * (p + 1) / parts;
      futures.push_back(std::async(std::launch::async, scan_rows, std::cref(from),
                                   std::cref(to), bound, begin, end));
    }
    for (auto& f : futures) {
      const Candidate c = f.get();
      if (better(c, best)) best = c;
    }
  }
  const CurveClass witness(best.m, best.n);
  return {std::log(curve_length(to, witness) / curve_length(from, witness)), witness};
}

KappaResult kappa_metric(const HPoint& t1, const HPoint& t2, int bound, int parts) {
  const auto stretch = max_curve_stretch(MarkedTorus(t1, Normalization::UnitArea),
                                         MarkedTorus(t2, Normalization::UnitArea), bound, parts);
  const double gap = lambda_metric(t1, t2) - stretch.log_ratio;
  return {stretch.log_ratio, stretch.witness, gap, std::abs(gap) <= kDefaultTolerance};
}

double kappa_prime(const HPoint& t1, const HPoint& t2, int bound) {
  return max_curve_stretch(MarkedTorus(t1, Normalization::UnitGenerator),
                           MarkedTorus(t2, Normalization::UnitGenerator), bound)
      .log_ratio;
}

double sorvali_dilatation(const HPoint& t1, const HPoint& t2, int bound) {
  return std::max(kappa_prime(t1, t2, bound), kappa_prime(t2, t1, bound));
}

double s_kappa_prime(const HPoint& t1, const HPoint& t2, int bound) {
  return 0.5 * (kappa_prime(t1, t2, bound) + kappa_prime(t2, t1, bound));
}

double wp_tensor(const HPoint& t) { return 1.0 / (2.0 * t.im() * t.im()); }

double wp_distance(const HPoint& t1, const HPoint& t2) {
  return poincare_distance(t1, t2) / std::sqrt(2.0);
}

SorvaliCheck sorvali_inequality(double dilatation, double teichmuller, double tol) {
  auto holds = [&](double dt) {
    return dilatation <= dt + tol && dt <= 2.0 * dilatation + tol;
  };
  return {holds(2.0 * teichmuller), holds(teichmuller)};
}

MetricReport full_report(const HPoint& t1, const HPoint& t2, int bound, int parts) {
  const KappaResult kappa = kappa_metric(t1, t2, bound, parts);
  const double fwd = kappa_prime(t1, t2, bound);
  const double rev = kappa_prime(t2, t1, bound);
  const double teich = teichmuller_metric(t1, t2);
  const double dilatation = std::max(fwd, rev);

  MetricReport report{
      .tau_from = t1,
      .tau_to = t2,
      .bound = bound,
      .lambda = lambda_metric(t1, t2),
      .teich = teich,
      .kappa_enumerated = kappa.value,
      .kappa_witness = kappa.witness,
      // Rounding can leave the gap a few ulps below zero.
      .kappa_gap = std::max(0.0, kappa.gap),
      .kappa_attained = kappa.attained,
      .kappa_prime_fwd = fwd,
      .kappa_prime_rev = rev,
      .sorvali_d = dilatation,
      .s_kappa_prime = 0.5 * (fwd + rev),
      .wp = wp_distance(t1, t2),
      .poincare = poincare_distance(t1, t2),
      .sorvali = sorvali_inequality(dilatation, teich),
  };
  return report;
}

}  // namespace flatmod
