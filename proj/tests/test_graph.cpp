#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fig2.hpp"
#include "hfwalk/graph.hpp"
#include "hfwalk/rng.hpp"

using namespace hfw;

TEST_CASE("graph matches pairwise BFS check at t=(3,3)") {
  TorusParams tp({2, 2}, {1, 1});
  ShapeGraph G = build_shape_graph(tp, 1000000);
  const int S = G.S();
  for (int a = 0; a < S; ++a) {
    std::vector<char> isnb(S, 0);
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) isnb[G.nbr(k)] = 1;
    for (int b = 0; b < S; ++b) {
      auto ds = neighbor_delta(G.shapes[a], G.shapes[b]);
      if (a == b) {
        CHECK(ds.size() == 2);
        CHECK(!isnb[b]);
      } else {
        CHECK((ds.size() == 1) == (bool)isnb[b]);
      }
    }
  }
}

TEST_CASE("degree + 2 equals the height-level neighbour count") {
  TorusParams tp({2, 2}, {1, 1});
  ShapeGraph G = build_shape_graph(tp, 1000000);
  for (int a = 0; a < G.S(); ++a) {
    int nb = 0;
    for (int b = 0; b < G.S(); ++b)
      nb += (int)neighbor_delta(G.shapes[a], G.shapes[b]).size();
    CHECK(nb == G.deg(a) + 2);
  }
}

TEST_CASE("adjacency symmetric, connected, min degree at t=(4,4)") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  CHECK(G.connected());
  std::vector<std::vector<char>> nb(G.S(), std::vector<char>(G.S(), 0));
  for (int a = 0; a < G.S(); ++a) {
    CHECK(G.deg(a) >= 1);
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) nb[a][G.nbr(k)] = 1;
  }
  for (int a = 0; a < G.S(); ++a)
    for (int b = 0; b < G.S(); ++b) CHECK(nb[a][b] == nb[b][a]);
}

TEST_CASE("y: antisymmetry, bound, agreement with delta means") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  for (int a = 0; a < G.S(); ++a)
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) {
      int b = G.nbr(k);
      Rat y = G.y(a, k);
      CHECK(y == y_direct(G.shapes[a], G.shapes[b]));
      CHECK(y == -y_direct(G.shapes[b], G.shapes[a]));
      CHECK(abs(y) <= 1);
      auto ds = neighbor_delta(G.shapes[a], G.shapes[b]);
      REQUIRE(ds.size() == 1);
      int64_t sum = 0;
      for (int8_t d : ds[0]) sum += d;
      CHECK(y == Rat(sum, tp.V()));
    }
  CHECK_THROWS_AS(y_direct(G.shapes[0], G.shapes[0]), GeometryError);
}

TEST_CASE("y_volume equals y_direct on disjoint neighbour pairs at t=(4,4)") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  int tested = 0;
  for (int a = 0; a < G.S(); ++a)
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) {
      const Shape &A = G.shapes[a], &B = G.shapes[G.nbr(k)];
      bool disjoint = true;
      for (size_t i = 0; i < A.w.size(); ++i)
        if (A.w[i] & B.w[i]) disjoint = false;
      if (!disjoint) continue;
      CHECK(y_volume(A, B) == G.y(a, k));
      ++tested;
    }
  CHECK(tested > 0);
  CHECK_THROWS_AS(y_volume(G.shapes[0], G.shapes[0]), GeometryError);
}

TEST_CASE("y_volume is invariant under simultaneous translation") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  auto translate = [&](const Shape &A, int dx, int dy) {
    Shape B(tp);
    for (int e : A.edge_list()) {
      int v = tp.vshift(tp.vshift(tp.ebase(e), 0, dx), 1, dy);
      B.set(tp.eaxis(e) * tp.V() + v);
    }
    return B;
  };
  int done = 0;
  for (int a = 0; a < G.S() && done < 20; ++a)
    for (uint32_t k = G.off[a]; k < G.off[a + 1] && done < 20; ++k) {
      const Shape &A = G.shapes[a], &B = G.shapes[G.nbr(k)];
      bool disjoint = true;
      for (size_t i = 0; i < A.w.size(); ++i)
        if (A.w[i] & B.w[i]) disjoint = false;
      if (!disjoint) continue;
      Rat v = y_volume(A, B);
      for (auto [dx, dy] : {std::pair{1, 0}, {0, 1}, {2, 3}})
        CHECK(y_volume(translate(A, dx, dy), translate(B, dx, dy)) == v);
      ++done;
    }
  CHECK(done > 0);
}

TEST_CASE("intertwine test agrees with adjacency on qualifying pairs") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  int applicable = 0, agree_yes = 0;
  for (int a = 0; a < G.S(); ++a) {
    std::vector<char> isnb(G.S(), 0);
    for (uint32_t k = G.off[a]; k < G.off[a + 1]; ++k) isnb[G.nbr(k)] = 1;
    for (int b = 0; b < G.S(); ++b) {
      if (a == b) continue;
      Tri t = intertwine_neighbor_test(G.shapes[a], G.shapes[b]);
      if (t == Tri::inapplicable) continue;
      ++applicable;
      CHECK((t == Tri::yes) == (bool)isnb[b]);
      if (t == Tri::yes) ++agree_yes;
    }
  }
  CHECK(applicable > 0);
  CHECK(agree_yes > 0);
}

TEST_CASE("corrector: zero functional, exact residuals, gauge invariance") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);

  std::vector<Rat> zero(G.adj.size(), 0);
  Corrector c0 = solve_corrector(G, 1500, &zero);
  for (const Rat &k : c0.kappa_q) CHECK(k == 0);

  Corrector c = solve_corrector(G);
  REQUIRE(c.exact);
  CHECK(c.kappa_q[0] == 0);
  for (const Rat &r : drift_residuals(G, c)) CHECK(r == 0);

  // adding a constant leaves all drift sums unchanged
  Corrector shifted = c;
  for (Rat &k : shifted.kappa_q) k += Rat(7, 3);
  for (const Rat &r : drift_residuals(G, shifted)) CHECK(r == 0);
}

TEST_CASE("exact diffusivity at p=(2,2), n=(1,1)") {
  TorusParams tp({2, 2}, {1, 1});
  DiffusivityReport rep = diffusivity_report(tp, 1000000);
  REQUIRE(rep.exact);
  CHECK(rep.sigma2_Xhat_q == rep.sigma2_Y_q + rep.p_same_q);
  CHECK(rep.p_same_q == Rat(2 * rep.shape_count, rep.edge_count + rep.shape_count));
  CHECK(rep.sigma2_Y_q > 0);
  CHECK(rep.sigma2_Xhat_q < 1);
  CHECK(rep.limit_value == doctest::Approx(1.0 / 3));
}

TEST_CASE("iterative solver matches the exact one at t=(4,4)") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  Corrector ce = solve_corrector(G);
  Corrector cf = solve_corrector(G, 0); // force the float path
  REQUIRE(ce.exact);
  REQUIRE(!cf.exact);
  CHECK(cf.residual <= 1e-10);
  for (int a = 0; a < G.S(); ++a)
    CHECK(cf.kappa[a] == doctest::Approx(ce.kappa[a]).epsilon(1e-8));
  DiffusivityReport re = exact_diffusivity(G, ce);
  DiffusivityReport rf = exact_diffusivity(G, cf);
  CHECK(rf.sigma2_Xhat == doctest::Approx(re.sigma2_Xhat).epsilon(1e-10));
}

TEST_CASE("corrector minimizes the one-step variance objective") {
  TorusParams tp({2, 2}, {1, 1});
  ShapeGraph G = build_shape_graph(tp, 1000000);
  Corrector c = solve_corrector(G);
  DiffusivityReport rep = exact_diffusivity(G, c);
  double base = variance_objective(G, c.kappa);
  CHECK(base == doctest::Approx(rep.sigma2_Xhat).epsilon(1e-12));
  Rng rng(derive_seed(2024, 0));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> pert = c.kappa;
    for (double &k : pert) k += (rand_unit(rng) - 0.5) * 0.2;
    CHECK(variance_objective(G, pert) >= base - 1e-12);
  }
}

TEST_CASE("edge-uniform law is stationary for the uniform-neighbour kernel") {
  TorusParams tp = fig2_params();
  ShapeGraph G = build_shape_graph(tp, 1000000);
  double mass = (double)(G.M() + G.S());
  for (int b = 0; b < G.S(); ++b) {
    double in = (G.deg(b) + 2.0) / mass * 2.0 / (G.deg(b) + 2.0);
    for (uint32_t k = G.off[b]; k < G.off[b + 1]; ++k) {
      int a = G.nbr(k);
      in += (G.deg(a) + 2.0) / mass / (G.deg(a) + 2.0);
    }
    CHECK(in == doctest::Approx((G.deg(b) + 2.0) / mass).epsilon(1e-12));
  }
}

TEST_CASE("labeling-route builder matches the pairwise sweep") {
  for (TorusParams tp : {TorusParams({4, 4}, {1, 1}),
                         TorusParams({2, 3}, {2, 1}),
                         TorusParams({2, 2}, {2, 2})}) {
    ShapeGraph a = build_shape_graph(tp, 1000000, 1);
    ShapeGraph b = build_shape_graph(tp, 1000000, 2);
    REQUIRE(a.S() == b.S());
    CHECK(a.off == b.off);
    CHECK(a.adj == b.adj);
  }
}
