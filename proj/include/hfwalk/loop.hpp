#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hfwalk/rng.hpp"
#include "hfwalk/shape.hpp"

namespace hfw {

// A monotone (up/left) closed path on the half-integer grid of the continuous
// torus.  The start point is stored with doubled coordinates (odd integers in
// [1, 2t_i)), so all arithmetic stays integral.  Loops are identified up to
// integral cyclic rotation of the move sequence; canon() picks the
// lexicographically minimal rotation as representative.
struct Loop {
  TorusParams tp;
  int sx = 0, sy = 0; // doubled coordinates
  std::string moves;  // 'U' and 'L'

  // Visited points (doubled coords), length moves.size(), starting at
  // (sx, sy); the path closes back to the start.
  std::vector<std::pair<int, int>> points() const;

  Loop canon() const;

  bool operator==(const Loop &o) const {
    return sx == o.sx && sy == o.sy && moves == o.moves;
  }
  bool operator<(const Loop &o) const {
    if (sy != o.sy) return sy < o.sy;
    if (sx != o.sx) return sx < o.sx;
    return moves < o.moves;
  }
};

struct LoopHash {
  size_t operator()(const Loop &l) const {
    size_t h = std::hash<std::string>()(l.moves);
    return h ^ (size_t(l.sx) * 0x9e3779b97f4a7c15ull) ^ (size_t(l.sy) << 20);
  }
};

// Minimal diagonal strip of a loop: the loop is contained in
// U_{t,d,[h-r/2,h+r/2]} with h in [0, t1/d1), r in [0, t1/d1]; r = t1/d1
// forces h = 0 (whole-torus convention).
struct Strip {
  Rat h, r;
};

// Membership in K_{t,d}: move counts (LEFT d2*t1, UP d1*t2), odd doubled
// start coordinates in range.  Closure is automatic from the counts.
bool is_in_K(const Loop &l);

// Fracture loops lambda(A): one loop per natural-partition cycle, canonical
// representatives, sorted.
std::vector<Loop> to_loops(const Shape &A);

// Inverse construction: the shape whose down-step set is mu^{-1} of the
// union of the loop images.  Throws GeometryError if the loops overlap in a
// non-touch way or the union is not a valid shape.
Shape from_loops(const TorusParams &tp, const std::vector<Loop> &loops);

// Touch case analysis: every coincidence of images must be a crossing at
// a half-integer point where both passages turn.
bool simple_up_to_touches(const Loop &l);
bool disjoint_up_to_touches(const Loop &a, const Loop &b);

Strip minimal_strip(const Loop &l);

// zeta: steps +1 -> UP, -1 -> LEFT from the doubled start point.
Loop zeta(const TorusParams &tp, int sx, int sy, const std::vector<int> &steps);

// Uniform sample from K_{t,d}: uniform start, Fisher-Yates shuffled step
// multiset, pushed through zeta.
Loop sample_loop(const TorusParams &tp, Rng &rng);

// All of K_{t,d} as canonical representatives, sorted; guarded by the
// loop-count bound cap.
BigInt loop_count_bound(const TorusParams &tp);
std::vector<Loop> enumerate_loops(const TorusParams &tp, int64_t cap);

// All of N_{t,n}, via compatible gcd(n)-subsets of K_{t,d}; sorted
// lexicographically on bitsets.
std::vector<Shape> enumerate_shapes(const TorusParams &tp, int64_t cap);

} // namespace hfw
