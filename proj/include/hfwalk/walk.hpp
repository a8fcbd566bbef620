#pragma once

#include <vector>

#include "hfwalk/rng.hpp"
#include "hfwalk/shape.hpp"

namespace hfw {

// Row bitmask of a +-1 vertex labeling (bit x set <=> delta(x,y) = +1);
// 128 bits so tori up to t1 = 127 fit.
using RowMask = unsigned __int128;

// Uniform sampler over the labelings delta in {-1,+1}^V such that f + delta
// is again a height function, for any representative f of the shape A.  The
// constraint is local: along every edge, delta may rise (-1 to +1) only
// across a down step and drop only across an up step.  Row patterns are
// therefore monotone-alternating words, few in number, and the labeling law
// factorizes through a cyclic product of per-row transfer matrices.
class DeltaSampler {
public:
  explicit DeltaSampler(const Shape &A);

  // Number of valid labelings; equals deg(A) + 2 in the shape graph.
  BigInt labeling_count() const;

  // Uniform draw; one mask per row, bottom to top.
  std::vector<RowMask> sample(Rng &rng) const;

  // All valid labelings (deg(A) + 2 of them), enumerated by depth-first
  // search over the per-row patterns with suffix-feasibility pruning.
  std::vector<std::vector<RowMask>> enumerate_all() const;

  const std::vector<std::vector<RowMask>> &patterns() const { return pats_; }

private:
  const Shape &A_;
  int t1_, t2_;
  std::vector<RowMask> downH_, downV_;     // per-row down-step masks
  std::vector<std::vector<RowMask>> pats_; // per-row valid patterns
  // suffix[k][i][j]: normalized weight of completing rows k..t2-1 starting
  // from pattern i of row k and closing on pattern j of row 0
  std::vector<std::vector<double>> suffix_;

  bool allowed(RowMask lo, RowMask hi, RowMask down) const;
};

// One step of the walk: draws a uniform labeling, applies it to the shape in
// place, and returns the average-height increment (the mean of delta).
double walk_step(Shape &A, Rng &rng);

// Applies a sampled labeling to the shape and returns the mean of delta.
double apply_labeling(Shape &A, const std::vector<RowMask> &rows);

} // namespace hfw
