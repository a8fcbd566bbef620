#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hfwalk/height.hpp"

namespace hfw {

// A set of torus edges stored as a bitset; for height-function shapes this is
// the down-step set, for unions of two neighbour shapes the line counts are
// doubled.
struct Shape {
  TorusParams tp;
  std::vector<uint64_t> w;

  Shape() = default;
  explicit Shape(const TorusParams &tp_)
      : tp(tp_), w((tp_.E() + 63) / 64, 0) {}

  bool test(int e) const { return (w[e >> 6] >> (e & 63)) & 1; }
  void set(int e) { w[e >> 6] |= uint64_t(1) << (e & 63); }
  void reset(int e) { w[e >> 6] &= ~(uint64_t(1) << (e & 63)); }

  int count() const;
  std::vector<int> edge_list() const; // sorted edge indices

  bool operator==(const Shape &o) const { return w == o.w; }
  // Lexicographic order on the bitset read as the sorted edge-index list.
  bool operator<(const Shape &o) const;
};

struct ShapeHash {
  size_t operator()(const Shape &s) const {
    size_t h = 1469598103934665603ull;
    for (uint64_t x : s.w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Square condition at every vertex:
// |A∩{(x,1),(x+e1,2)}| = |A∩{(x,2),(x+e2,1)}|.
bool square_condition(const Shape &A);

// Line counts: |A ∩ L| == a_i for every line in direction i.
bool line_counts(const Shape &A, int a1, int a2);

// Membership in N_{t,a}.
inline bool is_shape(const Shape &A, int a1, int a2) {
  return square_condition(A) && line_counts(A, a1, a2);
}

// Down-step set of a height function.
Shape nu(const HeightFunction &f);

// Inverse of nu given the base value f(0,0); follows the row-then-column
// induction.  Throws if A is not in N_{t,n}.
HeightFunction reconstruct_from_shape(const Shape &A, const Rat &base);

// Average of (f - f(0,0)) for any representative f of A; f_hat = base + this.
Rat shape_offset(const Shape &A);

// First edge of A hit when shifting e forward along its axis; identity on A.
int phi(const Shape &A, int e);

// Next edge of A strictly forward of e (e must be in A).
int psi(const Shape &A, int e);

// The pi12 permutation of A and its inverse.
int pi12(const Shape &A, int e);
int pi21(const Shape &A, int e);

// Orbits of pi12 on A; cycles are returned in traversal order, the list
// sorted by smallest contained edge.
std::vector<std::vector<int>> natural_partition(const Shape &A);

// The canonical shape A* = {(x,i): x_i in {0..n_i-1}}.
Shape astar_shape(const TorusParams &tp);

// Executes the chi-descent of the irreducibility proof: repeatedly flips a
// single site to strictly decrease chi until the shape is A*.  Returns the
// number of flips.
int is_irreducible_reachable(const Shape &A);

// Both +-1-valued candidates for delta = g - f with nu(f)=A, nu(g)=B, found
// by breadth-first propagation of delta(0) = +1 and -1 over torus edges.
// Empty iff the shapes are not neighbours.
std::vector<std::vector<int8_t>> neighbor_delta(const Shape &A, const Shape &B);

// Canonical-path potential of a shape: u[v] = number of A-edges on the path
// (0,0) -> (x,0) -> (x,y).  For two shapes, c = u_A - u_B is the unique
// potential of the field 2^-1(delta(x+e_i)-delta(x)); the shapes are
// neighbours iff max(c) - min(c) <= 1.
std::vector<int8_t> shape_potential(const Shape &A);

} // namespace hfw
