#pragma once

#include <vector>

#include "hfwalk/loop.hpp"

namespace hfw {

// Adjacency of N_{t,n} under the neighbour relation, stored as CSR lists
// over the sorted shape enumeration.  Per-shape canonical-path potentials
// are cached so the edge functional y evaluates in O(1): for a neighbour
// pair with delta(0)=s, y(A,B) = s + 2(sum u_A - sum u_B)/|V|.
struct ShapeGraph {
  TorusParams tp;
  std::vector<Shape> shapes;
  std::vector<int8_t> pot;    // |S| x V block of potentials, u(0)=0
  std::vector<int64_t> usum;  // per-shape potential sums
  std::vector<uint32_t> off;  // CSR offsets, size |S|+1
  std::vector<uint32_t> adj;  // neighbour index; bit 31 set iff delta(0)=-1

  static constexpr uint32_t kSignBit = 0x80000000u;

  int S() const { return (int)shapes.size(); }
  // |M| counts ordered pairs (A,B) with A~B; the relation is reflexive, so
  // the diagonal is included.
  int64_t M() const { return (int64_t)adj.size() + S(); }
  int deg(int a) const { return (int)(off[a + 1] - off[a]); }
  int nbr(uint32_t k) const { return (int)(adj[k] & ~kSignBit); }
  int delta0(uint32_t k) const { return (adj[k] & kSignBit) ? -1 : 1; }

  Rat y(int a, uint32_t k) const {
    return Rat(delta0(k)) +
           Rat(2 * (usum[a] - usum[nbr(k)]), tp.V());
  }
  double yd(int a, uint32_t k) const {
    return delta0(k) + 2.0 * (usum[a] - usum[nbr(k)]) / tp.V();
  }

  bool connected() const;
  int find(const Shape &A) const; // binary search; -1 if absent
};

// method 0: automatic (pairwise potential sweep for small |S|, labeling
// enumeration above); 1: force the pairwise sweep; 2: force the labeling
// route.  Both produce identical graphs (tested).
ShapeGraph build_shape_graph(const TorusParams &tp, int64_t cap,
                             int method = 0);

// y(A,B) = g_hat - f_hat for neighbouring representatives nu(f)=A, nu(g)=B;
// throws GeometryError if the shapes are not neighbours or A=B.
Rat y_direct(const Shape &A, const Shape &B);

// The volume evaluation of the same difference for disjoint shapes:
// |V|^-1 sum_x (1_{phi_{A|B}(x,1) in B} - 1_{phi_{A|B}(x,1) in A}).
// Throws GeometryError if the shapes overlap.
Rat y_volume(const Shape &A, const Shape &B);

enum class Tri { no = 0, yes = 1, inapplicable = 2 };

// Combinatorial neighbour test: if the minimal strips of the two loop
// families are pairwise disjoint, checks the alternating h-ordering; else if
// A and B are disjoint and each closed under pi12 of the union, checks that
// psi of the union swaps the two natural partitions.  Inapplicable when
// neither hypothesis holds.
Tri intertwine_neighbor_test(const Shape &A, const Shape &B);

struct Corrector {
  bool exact = false;
  std::vector<Rat> kappa_q;  // exact mode only
  std::vector<double> kappa; // always filled, kappa[0] = 0
  double residual = 0;       // max-norm martingale residual (float mode)
  int iterations = 0;
};

// Solves deg(A) kappa(A) - sum_B kappa(B) = sum_B y(A,B) with kappa pinned
// to 0 at the first (lexicographically smallest) shape.  Exact p-adic solve
// when |S| <= exact_threshold, Jacobi-preconditioned conjugate gradients
// above it.  yvals may override the edge functional (one rational per CSR
// entry, antisymmetric); by default the graph's y is used.
Corrector solve_corrector(const ShapeGraph &G, int exact_threshold = 1500,
                          const std::vector<Rat> *yvals = nullptr);

// Drift sum_B (y(A,B) + kappa(B) - kappa(A)) per shape, exact; requires an
// exact corrector.
std::vector<Rat> drift_residuals(const ShapeGraph &G, const Corrector &c);

struct DiffusivityReport {
  TorusParams tp;
  int64_t shape_count = 0;
  int64_t edge_count = 0; // |M|, diagonal included
  bool exact = false;
  Rat sigma2_Y_q, p_same_q, sigma2_Xhat_q, gap_q; // exact mode only
  double sigma2_Y = 0, p_same_shape = 0, sigma2_Xhat = 0;
  double limit_value = 0, gap = 0;
  double residual = 0;
  int iterations = 0;
};

// sigma^2(Y) = sum over ordered neighbour pairs of (y + kappa(B) -
// kappa(A))^2 / (|M|+|S|); sigma^2(Xhat) adds the same-shape mass
// 2|S|/(|M|+|S|).
DiffusivityReport exact_diffusivity(const ShapeGraph &G, const Corrector &c);

// The one-step variance objective minimized by the corrector (float).
double variance_objective(const ShapeGraph &G,
                          const std::vector<double> &kappa);

// Convenience: enumerate, build, solve, report.
DiffusivityReport diffusivity_report(const TorusParams &tp, int64_t cap,
                                     int exact_threshold = 1500);

} // namespace hfw
