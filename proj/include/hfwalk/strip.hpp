#pragma once

#include <vector>

#include "hfwalk/loop.hpp"
#include "hfwalk/shape.hpp"

namespace hfw {

// The fracture picture of a shape: its loops together with their minimal
// strips, and the merged arc decomposition of the strip union on the circle
// R/(t1/d1)Z.  Arcs are closed intervals [lo, hi] with lo in [0, T) and
// hi - lo <= T; hi may exceed T for arcs that wrap.
struct FracturePicture {
  TorusParams tp;
  std::vector<Loop> loops;
  std::vector<Strip> strips;           // aligned with loops
  std::vector<std::pair<Rat, Rat>> arcs; // merged strip union
  bool whole;                          // strip union covers the whole torus
};

FracturePicture fracture_picture(const Shape &A);

// Strip-based corrector: |V| kappa(A) is the volume of the points of the
// strip union whose first fracture-or-boundary hit to the right lands on the
// union's boundary, minus the volume of those whose hit lands on a fracture
// line.  Computed exactly by a piecewise-linear sweep over horizontal
// slices.  |kappa| <= 1.
Rat kappa_strip(const Shape &A);

// Grid oracle for kappa_strip: midpoint sampling at resolution res cells per
// unit length.  Returns the estimate and writes a rigor bound (twice the
// total area of cells adjacent to a classification change) to tol.
double kappa_raster(const Shape &A, int res, double &tol);

// Whether the 2 gcd(n) minimal strips of the loops of A and B are pairwise
// disjoint as closed arcs.
bool in_P(const Shape &A, const Shape &B);

// For (A,B) with pairwise disjoint strips: the closed form
//   2 (d1/t1) sum_i (h(beta^i) - h(alpha^i)) - 1[h(a^1)<h(b^1)] + 1[h(b^1)<h(a^1)]
// with both families indexed by increasing h.  Equals z(A,B)+kappa(B)-kappa(A).
// Throws GeometryError when the strips are not pairwise disjoint.
Rat z_closed_form(const Shape &A, const Shape &B);

// The maps z and d = y - z.  y is the average-height difference for
// neighbouring shapes and 0 otherwise.
Rat z_map(const Shape &A, const Shape &B);
Rat d_map(const Shape &A, const Shape &B);

// The sign-flipping involution on {B : strips of A and B pairwise disjoint}:
// each loop of B is rotated by a half turn around the midpoint of two
// boundary-touch points of the enclosing loops of A (first touch in
// canonical loop order).  Returns the reflected shape.
Shape tau_shape(const Shape &A, const Shape &B);

} // namespace hfw
