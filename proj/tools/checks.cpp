#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "flatmod/extremal.hpp"
#include "flatmod/metrics.hpp"
#include "flatmod/oracle.hpp"
#include "flatmod/torus.hpp"

namespace flatmod::checks {

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kOneSidedTol = 1e-9;
constexpr double kNormOracleTol = 1e-6;
constexpr double kSampledRelTol = 0.01;
constexpr double kEnumerationTol = 1e-6;
constexpr double kWpTol = 1e-9;
constexpr double kAnchorPathTol = 1e-8;
constexpr double kRandomPathRelTol = 1e-6;

const double kLog2 = std::log(2.0);
const double kLogGolden = std::log(std::numbers::phi);

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Collects failures and the largest observed deviation for one criterion.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void observe(const std::string& label, double value) {
    auto it = std::find_if(maxima_.begin(), maxima_.end(),
                           [&](const auto& p) { return p.first == label; });
    if (it == maxima_.end()) {
      maxima_.emplace_back(label, value);
    } else {
      it->second = std::max(it->second, value);
    }
  }
  CheckResult result(int id, std::string name) const {
    std::ostringstream os;
    os.precision(3);
    for (const auto& [label, value] : maxima_) os << label << "=" << value << " ";
    if (failures_ > 0) os << "| " << failures_ << " failure(s): " << notes_.str();
    return {id, std::move(name), failures_ == 0, os.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
  std::vector<std::pair<std::string, double>> maxima_;
};

oracle::SamplingConfig sampling(const Scale& s, std::uint64_t seed) {
  oracle::SamplingConfig cfg;
  cfg.grid_n = s.grid_n;
  cfg.random_pairs = s.random_pairs;
  cfg.direction_samples = s.direction_samples;
  cfg.path_samples = s.path_samples;
  cfg.seed = seed;
  return cfg;
}

CheckResult lipschitz_closed_form(const Scale& s, Sampler& rng) {
  Tally t;
  const auto cfg = sampling(s, 0);
  for (int k = 0; k < s.random_maps; ++k) {
    const LinearMap2 m = rng.unimodular_map();
    const double closed = lipschitz_constant(m);
    const double sampled = oracle::direction_sampled_norm(m, cfg);
    t.observe("max|closed-sampled|", std::abs(closed - sampled));
    t.expect(std::abs(closed - sampled) <= kNormOracleTol, "oracle disagrees with closed form");
    t.expect(sampled <= closed + kOneSidedTol, "oracle exceeds closed form");
  }
  return t.result(1, "closed-form Lipschitz constant vs direction-sampled operator norm");
}

CheckResult affine_extremality(const Scale& s, Sampler& rng) {
  Tally t;
  for (int k = 0; k < s.torus_pairs; ++k) {
    const MarkedTorus from(rng.metric_point(), Normalization::UnitArea);
    const MarkedTorus to(rng.metric_point(), Normalization::UnitArea);
    const LinearMap2 m = affine_comparison_map(from, to);
    const double closed = lipschitz_constant(m);
    const double sampled =
        oracle::sampled_lipschitz([&m](std::complex<double> z) { return m(z); }, from, to,
                                  sampling(s, rng.engine()()));
    t.observe("max rel deficit", (closed - sampled) / closed);
    t.expect(sampled >= (1.0 - kSampledRelTol) * closed, "sampled constant more than 1% low");
    t.expect(sampled <= closed + kOneSidedTol, "sampled constant above closed form");
  }
  return t.result(2, "affine comparison map attains the sampled Lipschitz constant");
}

CheckResult lambda_is_metric(const Scale& s, Sampler& rng) {
  Tally t;
  for (int k = 0; k < s.metric_triples; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point(), c = rng.metric_point();
    const double ab = lambda_metric(a, b), ba = lambda_metric(b, a);
    const double bc = lambda_metric(b, c), ac = lambda_metric(a, c);
    t.observe("max asymmetry", std::abs(ab - ba));
    t.expect(std::abs(ab - ba) <= kIdentityTol, "symmetry");
    t.expect(ac <= ab + bc + kIdentityTol, "triangle inequality");
    t.expect(std::abs(lambda_metric(a, a)) <= kIdentityTol, "lambda(t, t) != 0");
    t.expect(ab > kOneSidedTol, "distinct points at distance <= 1e-9");
  }
  return t.result(3, "lambda is a metric");
}

CheckResult distortion_is_squared_lipschitz(const Scale& s, Sampler& rng) {
  Tally t;
  for (int k = 0; k < s.random_maps; ++k) {
    const LinearMap2 m = rng.unimodular_map();
    const double l = lipschitz_constant(m);
    const double kq = qc_distortion(m);
    t.observe("max rel |K-L^2|", std::abs(kq - l * l) / (l * l));
    t.expect(close_rel(kq, l * l, kIdentityTol), "K != L^2");
  }
  for (int k = 0; k < s.metric_triples; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point();
    const double diff = std::abs(lambda_metric(a, b) - teichmuller_metric(a, b));
    t.observe("max|lambda-teich|", diff);
    t.expect(diff <= kIdentityTol, "lambda != teichmuller");
  }
  return t.result(4, "K = L^2 and lambda = Teichmuller distance");
}

CheckResult hyperbolic_isometry(const Scale& s, Sampler& rng) {
  Tally t;
  for (int k = 0; k < s.metric_triples; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point();
    const double diff = std::abs(lambda_metric(a, b) - 0.5 * poincare_distance(a, b));
    t.observe("max|lambda-h/2|", diff);
    t.expect(diff <= kIdentityTol, "lambda != h/2");
  }

  struct Anchor {
    HPoint from, to;
    double expected;
    const char* label;
  };
  const Anchor anchors[] = {
      {HPoint(0, 1), HPoint(0, 2), 0.5 * kLog2, "lambda(i,2i)"},
      {HPoint(0, 1), HPoint(1, 1), kLogGolden, "lambda(i,1+i)"},
  };
  for (const auto& anchor : anchors) {
    const double lambda = lambda_metric(anchor.from, anchor.to);
    t.expect(std::abs(lambda - anchor.expected) <= kIdentityTol,
             std::string(anchor.label) + " closed form");

    const MarkedTorus from(anchor.from, Normalization::UnitArea);
    const MarkedTorus to(anchor.to, Normalization::UnitArea);
    const LinearMap2 m = affine_comparison_map(from, to);
    const double grid = std::log(oracle::sampled_lipschitz(
        [&m](std::complex<double> z) { return m(z); }, from, to, sampling(s, 1)));
    t.observe(std::string(anchor.label) + " grid deficit", anchor.expected - grid);
    t.expect(grid >= anchor.expected + std::log1p(-kSampledRelTol),
             std::string(anchor.label) + " grid oracle more than 1% low");
    t.expect(grid <= anchor.expected + kOneSidedTol,
             std::string(anchor.label) + " grid oracle above closed form");

    const double path = 0.5 * oracle::hyperbolic_path_length(anchor.from, anchor.to,
                                                             oracle::poincare_weight,
                                                             sampling(s, 0));
    t.observe(std::string(anchor.label) + " path err", std::abs(path - anchor.expected));
    t.expect(std::abs(path - anchor.expected) <= kAnchorPathTol,
             std::string(anchor.label) + " path integral");
  }
  return t.result(5, "lambda = Poincare distance / 2 with grid and path oracles");
}

CheckResult kappa_equals_lambda(const Scale& s, Sampler& rng) {
  Tally t;
  std::vector<int> bounds;
  for (int n : {1, 2, 3, 5, 10, 20, 50, 100, 200, 500, 1000}) {
    if (n <= s.curve_bound) bounds.push_back(n);
  }
  if (bounds.back() != s.curve_bound) bounds.push_back(s.curve_bound);

  for (int k = 0; k < s.kappa_pairs; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point();
    const double lambda = lambda_metric(a, b);
    double previous = -std::numeric_limits<double>::infinity();
    for (int n : bounds) {
      const KappaResult kappa = kappa_metric(a, b, n);
      t.expect(kappa.value >= previous, "kappa decreased as N grew");
      t.expect(kappa.value <= lambda + kIdentityTol, "kappa above lambda");
      previous = kappa.value;
      if (n == s.curve_bound) {
        t.observe("max gap at N", kappa.gap);
        t.expect(kappa.gap < kEnumerationTol, "gap >= 1e-6 at N");
      }
    }
  }
  const KappaResult anchor = kappa_metric(HPoint(0, 1), HPoint(0, 2), 5);
  t.observe("|gap(i,2i)|", std::abs(anchor.gap));
  t.expect(std::abs(anchor.gap) <= kIdentityTol, "(i,2i) gap not 0 at N=5");
  t.expect(anchor.witness == CurveClass(0, 1), "(i,2i) witness is not (0,1)");
  return t.result(6, "kappa enumeration converges to lambda from below");
}

CheckResult extremal_family(const Scale& s) {
  Tally t;
  oracle::SamplingConfig cfg = sampling(s, 7);
  for (const double r : {1.5, 2.0, 3.0}) {
    const PiecewiseStretchMap affine = PiecewiseStretchMap::affine(r);
    bool some_member_differs = false;
    for (int i = 1; i <= 5; ++i) {
      const double eps = -0.5 + i / 6.0;
      const double lower = std::max(0.0, 1.0 / r - r / 2.0 + eps * r);
      const double upper = std::min(1.0 / r, r / 2.0 + eps * r);
      for (int j = 1; j <= 5; ++j) {
        const double delta = lower + (upper - lower) * j / 6.0;
        const PiecewiseStretchMap f(r, eps, delta);
        // Both blocks equal diag(r, 1/r) whenever delta = (1/2 + eps)/r, so
        // that whole line is the affine map, not just (0, 1/(2r)).
        const bool is_affine = std::abs(delta - (0.5 + eps) / r) <= 1e-12;

        t.expect(family_lipschitz_constant(f) == r, "analytic constant != r");
        const double sampled = sampled_family_lipschitz(f, cfg);
        t.observe("max rel deficit", (r - sampled) / r);
        t.expect(sampled >= (1.0 - kSampledRelTol) * r && sampled <= r + kOneSidedTol,
                 "sampled constant not within 1% below r");

        const double kq = family_qc_distortion(f);
        if (is_affine) {
          t.expect(std::abs(kq - r * r) <= kOneSidedTol, "affine member K != r^2");
          for (int g = 0; g <= 20; ++g) {
            const std::complex<double> p(g / 20.0, g / 20.0);
            t.expect(std::abs(f.evaluate(p) - affine.evaluate(p)) <= kOneSidedTol,
                     "member on the affine line is not the affine map");
          }
        } else {
          t.expect(kq > r * r + kOneSidedTol, "non-affine member K not above r^2");
          for (int gx = 0; gx <= 20 && !some_member_differs; ++gx) {
            for (int gy = 0; gy <= 20; ++gy) {
              const std::complex<double> p(gx / 20.0, gy / 20.0);
              if (std::abs(f.evaluate(p) - affine.evaluate(p)) > kOneSidedTol) {
                some_member_differs = true;
                break;
              }
            }
          }
        }
      }
    }
    t.expect(some_member_differs, "all family members coincide");
  }
  return t.result(7, "non-unique extremal Lipschitz maps");
}

CheckResult kappa_prime_and_sorvali(const Scale& s, Sampler& rng) {
  Tally t;
  const HPoint i(0, 1), two_i(0, 2);
  for (int n : {1, 2, 5, s.curve_bound}) {
    t.expect(std::abs(kappa_prime(i, two_i, n) - kLog2) <= kIdentityTol, "kappa'(i,2i) != log 2");
    t.expect(std::abs(kappa_prime(two_i, i, n)) <= kIdentityTol, "kappa'(2i,i) != 0");
  }
  for (int k = 0; k < s.kappa_pairs; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point();
    const double err = std::abs(s_kappa_prime(a, b, s.curve_bound) - teichmuller_metric(a, b));
    t.observe("max|Skappa'-teich|", err);
    t.expect(err < kEnumerationTol, "S kappa' differs from teich by >= 1e-6");
  }
  const double d = sorvali_dilatation(i, two_i, s.curve_bound);
  const SorvaliCheck check = sorvali_inequality(d, teichmuller_metric(i, two_i));
  t.expect(check.log_k && !check.half_log_k,
           "Sorvali inequality does not single out the log K convention at (i,2i)");
  return t.result(8, "kappa' asymmetry, S kappa' = Teichmuller, Sorvali inequality");
}

CheckResult weil_petersson(const Scale& s, Sampler& rng) {
  Tally t;
  t.expect(wp_tensor(HPoint(0, 1)) == 0.5, "wp_tensor(i) != 1/2");
  const auto cfg = sampling(s, 0);
  const double anchor = oracle::hyperbolic_path_length(HPoint(0, 1), HPoint(0, 2),
                                                       oracle::weil_petersson_weight, cfg);
  t.expect(std::abs(anchor - kLog2 / std::sqrt(2.0)) <= kAnchorPathTol, "WP path (i,2i)");
  for (int k = 0; k < s.wp_pairs; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point();
    const double wp = wp_distance(a, b);
    t.observe("max|wp-h/sqrt2|", std::abs(wp - poincare_distance(a, b) / std::sqrt(2.0)));
    t.expect(std::abs(wp - poincare_distance(a, b) / std::sqrt(2.0)) <= kWpTol, "wp != h/sqrt2");
    const double path = oracle::hyperbolic_path_length(a, b, oracle::weil_petersson_weight, cfg);
    t.observe("max rel path err", std::abs(path - wp) / wp);
    t.expect(close_rel(path, wp, kRandomPathRelTol), "WP path integral disagrees");
  }
  return t.result(9, "Weil-Petersson tensor and distance");
}

CheckResult fundamental_domain(const Scale& s, Sampler& rng) {
  Tally t;
  for (int k = 0; k < s.reduction_points; ++k) {
    const HPoint z = rng.plane_point();
    const Reduction red = reduce_to_fundamental_domain(z);
    t.expect(in_fundamental_domain(red.point, kIdentityTol), "point outside fundamental domain");
    const double err = std::abs(mobius_apply(red.witness, z).value() - red.point.value());
    t.expect(err <= kIdentityTol, "witness does not reproduce the point");
  }
  for (int k = 0; k < s.invariance_draws; ++k) {
    const HPoint a = rng.metric_point(), b = rng.metric_point();
    const IntMatrix2 g = rng.modular_element();
    const double diff =
        std::abs(lambda_metric(mobius_apply(g, a), mobius_apply(g, b)) - lambda_metric(a, b));
    t.observe("max|lambda(ga,gb)-lambda(a,b)|", diff);
    t.expect(diff <= kIdentityTol, "lambda not invariant under SL(2,Z)");
  }
  return t.result(10, "fundamental-domain reduction and SL(2,Z) invariance");
}

}  // namespace

LinearMap2 Sampler::unimodular_map() {
  const double alpha = uniform(0.0, 2.0 * std::numbers::pi);
  const double beta = uniform(0.0, 2.0 * std::numbers::pi);
  const LinearMap2 left(std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha));
  const LinearMap2 right(std::cos(beta), -std::sin(beta), std::sin(beta), std::cos(beta));
  return left * LinearMap2::standard_form(uniform(-10.0, 10.0), uniform(0.1, 10.0)) * right;
}

IntMatrix2 Sampler::modular_element(int max_length) {
  IntMatrix2 g = IntMatrix2::identity();
  const int length = uniform_int(1, max_length);
  for (int k = 0; k < length; ++k) {
    switch (uniform_int(0, 2)) {
      case 0: g = IntMatrix2::translation(1) * g; break;
      case 1: g = IntMatrix2::translation(-1) * g; break;
      default: g = IntMatrix2::inversion() * g; break;
    }
  }
  return g;
}

Scale Scale::full() {
  return {.random_maps = 1000,
          .torus_pairs = 50,
          .metric_triples = 500,
          .kappa_pairs = 100,
          .wp_pairs = 100,
          .reduction_points = 1000,
          .invariance_draws = 100,
          .grid_n = 200,
          .random_pairs = 1000000,
          .direction_samples = 100000,
          .path_samples = 10000,
          .curve_bound = 500};
}

Scale Scale::quick() {
  return {.random_maps = 100,
          .torus_pairs = 5,
          .metric_triples = 100,
          .kappa_pairs = 10,
          .wp_pairs = 20,
          .reduction_points = 200,
          .invariance_draws = 20,
          .grid_n = 200,
          .random_pairs = 200000,
          .direction_samples = 100000,
          .path_samples = 10000,
          .curve_bound = 500};
}

std::vector<CheckResult> run_all(const Scale& scale, std::uint64_t seed) {
  // Each criterion draws from its own stream so adding samples to one does
  // not shift the others.
  auto stream = [seed](std::uint64_t k) { return Sampler(seed + 0x9E3779B97F4A7C15ULL * k); };
  std::vector<CheckResult> results;
  {
    auto rng = stream(1);
    results.push_back(lipschitz_closed_form(scale, rng));
  }
  {
    auto rng = stream(2);
    results.push_back(affine_extremality(scale, rng));
  }
  {
    auto rng = stream(3);
    results.push_back(lambda_is_metric(scale, rng));
  }
  {
    auto rng = stream(4);
    results.push_back(distortion_is_squared_lipschitz(scale, rng));
  }
  {
    auto rng = stream(5);
    results.push_back(hyperbolic_isometry(scale, rng));
  }
  {
    auto rng = stream(6);
    results.push_back(kappa_equals_lambda(scale, rng));
  }
  results.push_back(extremal_family(scale));
  {
    auto rng = stream(8);
    results.push_back(kappa_prime_and_sorvali(scale, rng));
  }
  {
    auto rng = stream(9);
    results.push_back(weil_petersson(scale, rng));
  }
  {
    auto rng = stream(10);
    results.push_back(fundamental_domain(scale, rng));
  }
  return results;
}

}  // namespace flatmod::checks
