#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hfwalk/rational.hpp"

namespace hfw {

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Torus geometry for a (p,n)-periodic system.  Vertices are indexed
// v = y*t1 + x; the edge {x, x+e_i} is identified with the pair (x,i) and
// indexed axis*V + v with axis 0 along e1 and axis 1 along e2.
struct TorusParams {
  std::array<int, 2> p{}, n{}, t{}, d{};
  int g = 0;

  TorusParams() = default;

  TorusParams(std::array<int, 2> p_, std::array<int, 2> n_) : p(p_), n(n_) {
    for (int i = 0; i < 2; ++i) {
      if (p[i] < 1 || n[i] < 1)
        throw ParamError("p and n components must be positive");
      t[i] = p[i] + n[i];
    }
    g = std::gcd(n[0], n[1]);
    d = {n[0] / g, n[1] / g};
  }

  int V() const { return t[0] * t[1]; }
  int E() const { return 2 * t[0] * t[1]; }

  int wrap(int c, int axis) const {
    int m = t[axis];
    c %= m;
    return c < 0 ? c + m : c;
  }

  int vid(int x, int y) const { return wrap(y, 1) * t[0] + wrap(x, 0); }
  int vx(int v) const { return v % t[0]; }
  int vy(int v) const { return v / t[0]; }

  int eid(int x, int y, int axis) const { return axis * V() + vid(x, y); }
  int eaxis(int e) const { return e / V(); }
  int ebase(int e) const { return e % V(); }

  // Vertex shifted by k steps along an axis.
  int vshift(int v, int axis, int k = 1) const {
    int x = vx(v), y = vy(v);
    if (axis == 0) x = wrap(x + k, 0); else y = wrap(y + k, 1);
    return y * t[0] + x;
  }
  int eshift(int e, int k = 1) const {
    int axis = eaxis(e);
    return axis * V() + vshift(ebase(e), axis, k);
  }

  Rat q(int axis) const { return Rat(p[axis] - n[axis], t[axis]); }

  // Circumference of the circle of diagonal strip positions, t1/d1 (== t2/d2
  // as elements of the quotient lattice).
  Rat strip_period() const { return Rat(t[0], d[0]); }

  // Loop length n = d2*t1 + d1*t2; also the number of LEFT (d2*t1) and UP
  // (d1*t2) moves of any fracture loop.
  int loop_left_moves() const { return d[1] * t[0]; }
  int loop_up_moves() const { return d[0] * t[1]; }
  int loop_len() const { return loop_left_moves() + loop_up_moves(); }

  bool operator==(const TorusParams &o) const { return p == o.p && n == o.n; }
};

} // namespace hfw
