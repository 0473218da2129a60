#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/random.hpp"

namespace cayley {

struct SuiteResult {
  std::string name;
  bool passed = true;
  int trials = 0;
  double worst = 0;  // largest residual seen
  std::string detail;
};

struct CheckOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int m = 2;  // fiber dimension for the gauge suites
};

/// Basic fields whose flow is differentiable, gathered from constant fields and seeded basic bases.
std::vector<DiscreteVF> differentiable_basic_fields(const LatticePtr& L, int seeds = 16);

SuiteResult suite_d_squared(const LatticePtr& L, Rng& rng, int trials, double tol);
SuiteResult suite_delta_squared(const LatticePtr& L, Rng& rng, int trials, double tol);
SuiteResult suite_delta_of_delta_e(const LatticePtr& L, double tol);
SuiteResult suite_theta_squared(const LatticePtr& L, double tol);
SuiteResult suite_leibniz(const LatticePtr& L, Rng& rng, int trials, double tol);
SuiteResult suite_double_contraction(const LatticePtr& L, Rng& rng, int trials, double tol);
SuiteResult suite_lie_cartan(const LatticePtr& L, Rng& rng, int trials, double tol);
SuiteResult suite_invertibility_conditions(const LatticePtr& L, Rng& rng, int trials);
SuiteResult suite_integral_curves(const LatticePtr& L, Rng& rng, int trials, int steps);
SuiteResult suite_gauge_invariance(const LatticePtr& L, Rng& rng, int trials, int m, double tol);
SuiteResult suite_flat_gauge(const LatticePtr& L, Rng& rng, int trials, int m, double tol);
SuiteResult suite_field_strength(const LatticePtr& L, Rng& rng, int trials, int m, double tol);
SuiteResult suite_linear_bianchi(const LatticePtr& L, Rng& rng, int trials, double tol);
SuiteResult suite_canonical_torsion(const LatticePtr& L, double tol);

/// Every suite above with one seeded engine, in a fixed order.
std::vector<SuiteResult> run_invariant_suites(const LatticePtr& L, const CheckOptions& opts);

}  // namespace cayley
