#include "hfwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hfwalk/dixon.hpp"
#include "hfwalk/walk.hpp"

namespace hfw {

bool ShapeGraph::connected() const {
  if (shapes.empty()) return true;
  std::vector<char> seen(S(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (uint32_t k = off[a]; k < off[a + 1]; ++k) {
      int b = nbr(k);
      if (!seen[b]) {
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == S();
}

int ShapeGraph::find(const Shape &A) const {
  auto it = std::lower_bound(shapes.begin(), shapes.end(), A);
  if (it == shapes.end() || !(*it == A)) return -1;
  return (int)(it - shapes.begin());
}

ShapeGraph build_shape_graph(const TorusParams &tp, int64_t cap, int method) {
  ShapeGraph G;
  G.tp = tp;
  G.shapes = enumerate_shapes(tp, cap);
  const int S = G.S(), V = tp.V();
  G.pot.resize((size_t)S * V);
  G.usum.resize(S);
  for (int s = 0; s < S; ++s) {
    auto u = shape_potential(G.shapes[s]);
    std::copy(u.begin(), u.end(), G.pot.begin() + (size_t)s * V);
    G.usum[s] = std::accumulate(u.begin(), u.end(), int64_t(0));
  }

  std::vector<std::vector<uint32_t>> rows(S);
  bool pairwise = method == 1 || (method == 0 && S <= 2000);
  if (pairwise) {
    // Pairwise sweep: A~B iff the potential difference c = u_A - u_B has
    // range at most 1; c(0)=0, so the range is {-1,0} (delta(0)=+1) or
    // {0,1} (delta(0)=-1).
    for (int a = 0; a < S; ++a) {
      const int8_t *pa = &G.pot[(size_t)a * V];
      for (int b = a + 1; b < S; ++b) {
        const int8_t *pb = &G.pot[(size_t)b * V];
        int8_t mn = 0, mx = 0;
        for (int v = 0; v < V; ++v) {
          int8_t c = (int8_t)(pa[v] - pb[v]);
          mn = std::min(mn, c);
          mx = std::max(mx, c);
        }
        if (mx - mn <= 1) {
          // sign of delta(0) for (a,b); opposite for (b,a)
          bool ab_minus = mn == 0;
          rows[a].push_back((uint32_t)b |
                            (ab_minus ? ShapeGraph::kSignBit : 0));
          rows[b].push_back((uint32_t)a |
                            (ab_minus ? 0 : ShapeGraph::kSignBit));
        }
      }
    }
  } else {
    // Labeling route, O(|S| deg): the deg + 2 valid labelings of each shape
    // hit each neighbour exactly once, plus the two constants which fix the
    // shape.
    for (int a = 0; a < S; ++a) {
      DeltaSampler smp(G.shapes[a]);
      for (const auto &lab : smp.enumerate_all()) {
        Shape B = G.shapes[a];
        apply_labeling(B, lab);
        int b = G.find(B);
        if (b < 0)
          throw SolverError("labeling left the enumerated shape set");
        if (b == a) continue;
        bool minus = !(lab[0] & 1);
        rows[a].push_back((uint32_t)b |
                          (minus ? ShapeGraph::kSignBit : 0));
      }
      std::sort(rows[a].begin(), rows[a].end(),
                [](uint32_t x, uint32_t y) {
                  return (x & ~ShapeGraph::kSignBit) <
                         (y & ~ShapeGraph::kSignBit);
                });
    }
  }
  G.off.resize(S + 1, 0);
  for (int a = 0; a < S; ++a) G.off[a + 1] = G.off[a] + (uint32_t)rows[a].size();
  G.adj.reserve(G.off[S]);
  for (int a = 0; a < S; ++a)
    G.adj.insert(G.adj.end(), rows[a].begin(), rows[a].end());
  return G;
}

Rat y_direct(const Shape &A, const Shape &B) {
  if (A == B) throw GeometryError("y is only defined for distinct neighbours");
  auto uA = shape_potential(A), uB = shape_potential(B);
  int mn = 0, mx = 0;
  int64_t sum = 0;
  for (size_t v = 0; v < uA.size(); ++v) {
    int c = uA[v] - uB[v];
    mn = std::min(mn, c);
    mx = std::max(mx, c);
    sum += c;
  }
  if (mx - mn > 1) throw GeometryError("shapes are not neighbours");
  int s = mn < 0 ? 1 : -1;
  return Rat(s) + Rat(2 * sum, (int64_t)uA.size());
}

Rat y_volume(const Shape &A, const Shape &B) {
  const TorusParams &tp = A.tp;
  Shape C(tp);
  for (size_t i = 0; i < C.w.size(); ++i) {
    if (A.w[i] & B.w[i]) throw GeometryError("shapes overlap");
    C.w[i] = A.w[i] | B.w[i];
  }
  int64_t sum = 0;
  for (int v = 0; v < tp.V(); ++v) {
    int e = phi(C, v); // horizontal edge at v, resolved within the union
    sum += (B.test(e) ? 1 : 0) - (A.test(e) ? 1 : 0);
  }
  return Rat(sum, tp.V());
}

namespace {

// Pairwise disjointness of the 2g closed minimal-strip arcs on the circle of
// circumference t1/d1.
bool strips_disjoint(const TorusParams &tp, const std::vector<Strip> &strips) {
  Rat T = tp.strip_period();
  for (size_t i = 0; i < strips.size(); ++i) {
    if (strips[i].r >= T) return false;
    for (size_t j = i + 1; j < strips.size(); ++j) {
      Rat d = rat_mod(strips[i].h - strips[j].h, T);
      if (d > T / 2) d = T - d;
      if (d <= (strips[i].r + strips[j].r) / 2) return false;
    }
  }
  return true;
}

bool closed_under_pi12_of_union(const Shape &C, const Shape &X) {
  for (int e : X.edge_list())
    if (!X.test(pi12(C, e))) return false;
  return true;
}

} // namespace

Tri intertwine_neighbor_test(const Shape &A, const Shape &B) {
  const TorusParams &tp = A.tp;
  bool disjoint = true;
  for (size_t i = 0; i < A.w.size(); ++i)
    if (A.w[i] & B.w[i]) disjoint = false;
  if (!disjoint) return Tri::inapplicable;

  auto la = to_loops(A), lb = to_loops(B);
  std::vector<Strip> strips;
  std::vector<std::pair<Rat, int>> hs; // (h, family)
  for (const Loop &l : la) {
    strips.push_back(minimal_strip(l));
    hs.push_back({strips.back().h, 0});
  }
  for (const Loop &l : lb) {
    strips.push_back(minimal_strip(l));
    hs.push_back({strips.back().h, 1});
  }
  if (strips_disjoint(tp, strips)) {
    // alternation of the h-ordering around the circle
    std::sort(hs.begin(), hs.end());
    for (size_t i = 0; i < hs.size(); ++i)
      if (hs[i].second == hs[(i + 1) % hs.size()].second) return Tri::no;
    return Tri::yes;
  }

  Shape C(tp);
  for (size_t i = 0; i < C.w.size(); ++i) C.w[i] = A.w[i] | B.w[i];
  if (!is_shape(C, 2 * tp.n[0], 2 * tp.n[1])) return Tri::inapplicable;
  if (!closed_under_pi12_of_union(C, A) || !closed_under_pi12_of_union(C, B))
    return Tri::inapplicable;
  for (int e : A.edge_list())
    if (!B.test(psi(C, e))) return Tri::no;
  return Tri::yes;
}

Corrector solve_corrector(const ShapeGraph &G, int exact_threshold,
                          const std::vector<Rat> *yvals) {
  const int S = G.S();
  Corrector c;
  if (S == 0) return c;
  auto yval = [&](int a, uint32_t k) -> Rat {
    return yvals ? (*yvals)[k] : G.y(a, k);
  };
  std::vector<Rat> b(S, 0);
  for (int a = 0; a < S; ++a)
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) b[a] += yval(a, k);

  if (S <= exact_threshold) {
    BigInt W = 1;
    for (const Rat &x : b) W = boost::multiprecision::lcm(W, denominator(x));
    SparseIntMatrix L;
    L.n = S - 1;
    L.off.push_back(0);
    std::vector<BigInt> rhs(S - 1);
    for (int a = 1; a < S; ++a) {
      L.col.push_back(a - 1);
      L.val.push_back(G.deg(a));
      for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) {
        int nb = G.nbr(k);
        if (nb == 0) continue;
        L.col.push_back(nb - 1);
        L.val.push_back(-1);
      }
      L.off.push_back((uint32_t)L.col.size());
      rhs[a - 1] = numerator(b[a]) * (W / denominator(b[a]));
    }
    std::vector<Rat> x = S > 1 ? dixon_solve(L, rhs) : std::vector<Rat>{};
    c.exact = true;
    c.kappa_q.assign(S, 0);
    c.kappa.assign(S, 0.0);
    for (int a = 1; a < S; ++a) {
      c.kappa_q[a] = x[a - 1] / Rat(W);
      c.kappa[a] = to_double(c.kappa_q[a]);
    }
    return c;
  }

  // Jacobi-preconditioned conjugate gradients on the (consistent, singular)
  // Laplacian system; the iterates stay orthogonal to constants.
  std::vector<double> bd(S), x(S, 0.0), r(S), z(S), p(S), q(S);
  double bnorm = 0;
  for (int a = 0; a < S; ++a) {
    bd[a] = to_double(b[a]);
    bnorm += bd[a] * bd[a];
  }
  bnorm = std::sqrt(bnorm);
  auto project = [&](std::vector<double> &v) {
    double m = std::accumulate(v.begin(), v.end(), 0.0) / S;
    for (double &t : v) t -= m;
  };
  auto matvec = [&](const std::vector<double> &in, std::vector<double> &out) {
    for (int a = 0; a < S; ++a) {
      double s = (double)G.deg(a) * in[a];
      for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) s -= in[G.nbr(k)];
      out[a] = s;
    }
  };
  r = bd;
  project(r);
  double rz = 0;
  for (int a = 0; a < S; ++a) {
    z[a] = r[a] / G.deg(a);
    rz += r[a] * z[a];
  }
  p = z;
  int it = 0;
  const int maxit = 20 * S + 100;
  for (; it < maxit; ++it) {
    double rn = 0;
    for (double t : r) rn += t * t;
    if (std::sqrt(rn) <= 1e-14 * (bnorm + 1)) break;
    matvec(p, q);
    double pq = std::inner_product(p.begin(), p.end(), q.begin(), 0.0);
    double alpha = rz / pq;
    for (int a = 0; a < S; ++a) {
      x[a] += alpha * p[a];
      r[a] -= alpha * q[a];
    }
    if (it % 50 == 49) {
      project(x);
      matvec(x, r);
      for (int a = 0; a < S; ++a) r[a] = bd[a] - r[a];
      project(r);
    }
    double rz2 = 0;
    for (int a = 0; a < S; ++a) {
      z[a] = r[a] / G.deg(a);
      rz2 += r[a] * z[a];
    }
    double beta = rz2 / rz;
    rz = rz2;
    for (int a = 0; a < S; ++a) p[a] = z[a] + beta * p[a];
  }
  double x0 = x[0];
  for (double &t : x) t -= x0;
  c.kappa = std::move(x);
  c.iterations = it;
  // martingale residual in the kernel normalization
  matvec(c.kappa, q);
  double worst = 0;
  for (int a = 0; a < S; ++a)
    worst = std::max(worst, std::abs(bd[a] - q[a]) / (G.deg(a) + 2));
  c.residual = worst;
  if (worst > 1e-10)
    throw SolverError("corrector iteration residual " + std::to_string(worst));
  return c;
}

std::vector<Rat> drift_residuals(const ShapeGraph &G, const Corrector &c) {
  if (!c.exact) throw SolverError("exact corrector required");
  std::vector<Rat> out(G.S(), 0);
  for (int a = 0; a < G.S(); ++a) {
    Rat s = 0;
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k)
      s += G.y(a, k) + c.kappa_q[G.nbr(k)] - c.kappa_q[a];
    out[a] = s;
  }
  return out;
}

DiffusivityReport exact_diffusivity(const ShapeGraph &G, const Corrector &c) {
  DiffusivityReport rep;
  rep.tp = G.tp;
  rep.shape_count = G.S();
  rep.edge_count = G.M();
  rep.exact = c.exact;
  rep.limit_value = 1.0 / (1 + 2 * G.tp.g);
  rep.residual = c.residual;
  rep.iterations = c.iterations;
  const int64_t mass = rep.edge_count + rep.shape_count; // |M|+|S|
  if (c.exact) {
    BigInt D = BigInt(G.tp.V());
    for (const Rat &k : c.kappa_q)
      D = boost::multiprecision::lcm(D, denominator(k));
    std::vector<BigInt> w(G.S());
    for (int a = 0; a < G.S(); ++a)
      w[a] = numerator(c.kappa_q[a]) * (D / denominator(c.kappa_q[a]));
    BigInt acc = 0;
    const BigInt DV = D / G.tp.V();
    for (int a = 0; a < G.S(); ++a)
      for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) {
        int b = G.nbr(k);
        BigInt term =
            BigInt(G.delta0(k)) * D + BigInt(2 * (G.usum[a] - G.usum[b])) * DV +
            w[b] - w[a];
        acc += term * term;
      }
    rep.sigma2_Y_q = Rat(acc, D * D * mass);
    rep.p_same_q = Rat(2 * rep.shape_count, mass);
    rep.sigma2_Xhat_q = rep.sigma2_Y_q + rep.p_same_q;
    Rat lim = Rat(1, 1 + 2 * G.tp.g);
    rep.gap_q = rep.sigma2_Xhat_q > lim ? rep.sigma2_Xhat_q - lim
                                        : lim - rep.sigma2_Xhat_q;
    rep.sigma2_Y = to_double(rep.sigma2_Y_q);
    rep.p_same_shape = to_double(rep.p_same_q);
    rep.sigma2_Xhat = to_double(rep.sigma2_Xhat_q);
    rep.gap = to_double(rep.gap_q);
    return rep;
  }
  double acc = 0;
  for (int a = 0; a < G.S(); ++a)
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) {
      double t = G.yd(a, k) + c.kappa[G.nbr(k)] - c.kappa[a];
      acc += t * t;
    }
  rep.sigma2_Y = acc / mass;
  rep.p_same_shape = 2.0 * rep.shape_count / mass;
  rep.sigma2_Xhat = rep.sigma2_Y + rep.p_same_shape;
  rep.gap = std::abs(rep.sigma2_Xhat - rep.limit_value);
  return rep;
}

double variance_objective(const ShapeGraph &G, const std::vector<double> &kappa) {
  double acc = 0;
  for (int a = 0; a < G.S(); ++a)
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) {
      double t = G.yd(a, k) + kappa[G.nbr(k)] - kappa[a];
      acc += t * t;
    }
  return (acc + 2.0 * G.S()) / (G.M() + G.S());
}

DiffusivityReport diffusivity_report(const TorusParams &tp, int64_t cap,
                                     int exact_threshold) {
  ShapeGraph G = build_shape_graph(tp, cap);
  Corrector c = solve_corrector(G, exact_threshold);
  return exact_diffusivity(G, c);
}

} // namespace hfw
