#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fig2.hpp"
#include "hfwalk/height.hpp"
#include "hfwalk/shape.hpp"

using namespace hfw;

TEST_CASE("make_params derived fields") {
  TorusParams a({3, 3}, {1, 1});
  CHECK(a.t == std::array<int, 2>{4, 4});
  CHECK(a.q(0) == Rat(1, 2));
  CHECK(a.q(1) == Rat(1, 2));
  CHECK(a.g == 1);
  CHECK(a.d == std::array<int, 2>{1, 1});

  TorusParams b({38, 38}, {2, 2});
  CHECK(b.t == std::array<int, 2>{40, 40});
  CHECK(b.g == 2);
  CHECK(b.d == std::array<int, 2>{1, 1});

  TorusParams c({1, 1}, {1, 1});
  CHECK(c.t == std::array<int, 2>{2, 2});
  CHECK(c.q(0) == 0);
  CHECK(c.q(1) == 0);

  CHECK_THROWS_AS(TorusParams({0, 1}, {1, 1}), ParamError);
  CHECK_THROWS_AS(TorusParams({2, 2}, {0, 2}), ParamError);
}

TEST_CASE("worked 4x4 example is a valid height function") {
  HeightFunction f = fig2_height();
  CHECK(is_height_function(f));
}

TEST_CASE("sgn on the worked example") {
  HeightFunction f = fig2_height();
  TorusParams tp = f.tp;
  CHECK(sgn(f, tp.eid(2, 0, 0)) == -1); // 4 -> 2.5
  CHECK(sgn(f, tp.eid(0, 0, 0)) == 1);  // 3 -> 3.5
  // each row has exactly n1 down steps
  for (int y = 0; y < tp.t[1]; ++y) {
    int downs = 0;
    for (int x = 0; x < tp.t[0]; ++x) downs += sgn(f, tp.eid(x, y, 0)) < 0;
    CHECK(downs == tp.n[0]);
  }
  for (int x = 0; x < tp.t[0]; ++x) {
    int downs = 0;
    for (int y = 0; y < tp.t[1]; ++y) downs += sgn(f, tp.eid(x, y, 1)) < 0;
    CHECK(downs == tp.n[1]);
  }
}

TEST_CASE("line returns the full orbit") {
  TorusParams tp = fig2_params();
  auto l0 = line(tp, tp.eid(0, 0, 0));
  std::vector<int> expect = {tp.eid(0, 0, 0), tp.eid(1, 0, 0), tp.eid(2, 0, 0),
                             tp.eid(3, 0, 0)};
  CHECK(l0 == expect);
  CHECK(line(tp, tp.eid(2, 0, 0)) == expect);
  for (int e = 0; e < tp.E(); ++e)
    CHECK((int)line(tp, e).size() == tp.t[tp.eaxis(e)]);
}

TEST_CASE("average height of the worked example") {
  HeightFunction f = fig2_height();
  CHECK(average_height(f) == Rat(27, 8));
  HeightFunction g = f;
  for (auto &x : g.v) x += 1;
  CHECK(average_height(g) == Rat(27, 8) + 1);
}

TEST_CASE("telescoping: signed steps sum to zero around rows and columns") {
  HeightFunction f = fig2_height();
  TorusParams tp = f.tp;
  for (int y = 0; y < tp.t[1]; ++y) {
    Rat s = 0;
    for (int x = 0; x < tp.t[0]; ++x) s += f.step(tp.eid(x, y, 0));
    CHECK(s == 0);
  }
  for (int x = 0; x < tp.t[0]; ++x) {
    Rat s = 0;
    for (int y = 0; y < tp.t[1]; ++y) s += f.step(tp.eid(x, y, 1));
    CHECK(s == 0);
  }
}

TEST_CASE("neighbor_delta: self-neighbouring gives both constant branches") {
  Shape A = fig2_shape();
  auto ds = neighbor_delta(A, A);
  REQUIRE(ds.size() == 2);
  for (int8_t x : ds[0]) CHECK(x == 1);
  for (int8_t x : ds[1]) CHECK(x == -1);
}

TEST_CASE("neighbor_delta symmetry and validity on the 4x4 torus") {
  Shape A = fig2_shape();
  TorusParams tp = A.tp;
  // translate of A by e1
  Shape B(tp);
  for (int e : A.edge_list())
    B.set(tp.eaxis(e) * tp.V() + tp.vshift(tp.ebase(e), 0, 1));
  auto dab = neighbor_delta(A, B);
  auto dba = neighbor_delta(B, A);
  CHECK(dab.empty() == dba.empty());
  if (!dab.empty()) {
    HeightFunction f = reconstruct_from_shape(A, 0);
    for (auto &delta : dab) {
      HeightFunction g = f;
      for (int v = 0; v < tp.V(); ++v) g.v[v] += delta[v];
      CHECK(is_height_function(g));
      CHECK(nu(g) == B);
    }
  }
}

TEST_CASE("potential-based neighbour test agrees with propagation") {
  // all shape pairs at t=(4,4), n=(1,1) via enumeration come later; here a
  // quick structural check on translates of the worked example
  Shape A = fig2_shape();
  TorusParams tp = A.tp;
  auto uA = shape_potential(A);
  for (int dx = 0; dx < tp.t[0]; ++dx)
    for (int dy = 0; dy < tp.t[1]; ++dy) {
      Shape B(tp);
      for (int e : A.edge_list()) {
        int v = tp.vshift(tp.vshift(tp.ebase(e), 0, dx), 1, dy);
        B.set(tp.eaxis(e) * tp.V() + v);
      }
      auto uB = shape_potential(B);
      int mn = 99, mx = -99;
      for (int v = 0; v < tp.V(); ++v) {
        int c = uA[v] - uB[v];
        mn = std::min(mn, c);
        mx = std::max(mx, c);
      }
      bool pot_neighbor = (mx - mn) <= 1;
      CHECK(pot_neighbor == !neighbor_delta(A, B).empty());
    }
}

TEST_CASE("chi is constant on shapes and shifts correctly") {
  HeightFunction f = fig2_height();
  HeightFunction g = f;
  for (auto &x : g.v) x += 5;
  CHECK(chi(f) == chi(g));
}
