#pragma once

#include <cstdint>
#include <vector>

#include "hfwalk/rng.hpp"
#include "hfwalk/shape.hpp"
#include "hfwalk/walk.hpp"

namespace hfw {

// Full walk state: the shape together with the integer anchor f(0,0); the
// average height is anchor + shape_offset(shape).
struct WalkState {
  Shape shape;
  int64_t anchor = 0;
};

WalkState make_state(const TorusParams &tp);

// One uniform step among the deg+2 valid labelings; updates shape and
// anchor, returns the average-height increment.
double step_walk(WalkState &st, Rng &rng);

struct SimConfig {
  int64_t steps = 1000000; // post burn-in steps per run
  int runs = 1;
  int64_t burn_in = -1; // negative: 50*shape_count if known, else 1e5
  uint64_t seed = 0;
  int64_t window = 0; // batch length; 0: sqrt(steps)
};

struct DiffusivityEstimate {
  double sigma2 = 0, se = 0;
  int64_t steps = 0, burn_in = 0, window = 0;
  int runs = 0, batches = 0;
};

// Batch-means estimate of lim Var(mean-height displacement)/n under the
// stationary shape law.  shape_count (if nonnegative) sizes the default
// burn-in.
DiffusivityEstimate estimate_diffusivity(const TorusParams &tp,
                                         const SimConfig &cfg,
                                         int64_t shape_count = -1);

struct StripStatistics {
  int64_t samples = 0;
  std::vector<double> eps;         // thresholds for the width fractions
  std::vector<double> r_fraction;  // P(normalized width <= eps)
  double ks_h = 0;                 // KS distance of normalized offsets
  double disjoint_fraction = 0;    // 2 gcd(n) independent strips disjoint
};

StripStatistics strip_statistics(const TorusParams &tp, int64_t samples,
                                 const std::vector<double> &eps_list,
                                 Rng &rng);

// Fraction of uniform bridge walks with x up and y down steps staying within
// xy/(x+y)*eps of the straight line at every time.
double gate_concentration_check(int x, int y, const Rat &eps, int64_t samples,
                                Rng &rng);

struct SimplexIntegralEstimate {
  double full = 0, full_se = 0;          // ~ 1/(1+2g)!
  double conditional = 0, cond_se = 0;   // ~ 1/(1+2g)
  double order_prob = 0, order_se = 0;   // ~ 1/(2g)!
};

// Monte Carlo evaluation of the ordered-simplex integral behind the
// diffusivity limit: E[(1 - 2 sum_i (J_i - I_i))^2; I_1<J_1<...<I_g<J_g]
// over uniform points of the unit cube.
SimplexIntegralEstimate simplex_integral_check(int g, int64_t samples,
                                               Rng &rng);

struct CountingConstantEstimate {
  double value = 0, se = 0; // ~ 2/binom(2g, g)
  int64_t conditioned = 0;  // samples with pairwise disjoint strips
};

// Conditional probability that two independently sampled families of gcd(n)
// loops with pairwise disjoint strips interleave in the strip-offset order.
CountingConstantEstimate counting_constant_check(const TorusParams &tp,
                                                 int64_t samples, Rng &rng);

} // namespace hfw
