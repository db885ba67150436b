#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flatmod/halfplane.hpp"
#include "flatmod/linmap.hpp"

// Cross-validation suite shared by `flatmod verify` and the acceptance binary.
// Tolerances are fixed here; only the sample counts scale.
namespace flatmod::checks {

struct Scale {
  int random_maps;        // det-1 maps for the operator-norm and K = L^2 checks
  int torus_pairs;        // pairs for the sampled affine extremality check
  int metric_triples;     // lambda metric axioms, lambda = teich, lambda = h/2
  int kappa_pairs;        // kappa and S kappa' enumeration checks
  int wp_pairs;
  int reduction_points;
  int invariance_draws;
  int grid_n;             // grid for sampled Lipschitz constants
  std::int64_t random_pairs;
  int direction_samples;
  int path_samples;
  int curve_bound;        // N for kappa / kappa'

  /// Counts as stated in the acceptance criteria.
  static Scale full();
  /// A fast subset for interactive use.
  static Scale quick();
};

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the ten cross-validation criteria in order.
std::vector<CheckResult> run_all(const Scale& scale, std::uint64_t seed);

// Random draws used by the checks and the unit tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Re in [-2, 2], Im in [0.2, 5].
  HPoint metric_point() { return HPoint(uniform(-2.0, 2.0), uniform(0.2, 5.0)); }
  /// Re in [-5, 5], Im in [0.1, 10].
  HPoint plane_point() { return HPoint(uniform(-5.0, 5.0), uniform(0.1, 10.0)); }
  /// Rotation * standard_form(c, d) * rotation with c in [-10, 10], d in [0.1, 10].
  LinearMap2 unimodular_map();
  /// Word of length 1..max_length in z+1, z-1, -1/z.
  IntMatrix2 modular_element(int max_length = 4);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace flatmod::checks
