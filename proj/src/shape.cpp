#include "hfwalk/shape.hpp"

#include <bit>
#include <queue>

namespace hfw {

int Shape::count() const {
  int c = 0;
  for (uint64_t x : w) c += std::popcount(x);
  return c;
}

std::vector<int> Shape::edge_list() const {
  std::vector<int> out;
  out.reserve(count());
  for (int e = 0; e < tp.E(); ++e)
    if (test(e)) out.push_back(e);
  return out;
}

bool Shape::operator<(const Shape &o) const {
  // First differing edge index decides; the shape containing it sorts first.
  // Equivalent to lexicographic order on sorted equal-length edge lists.
  for (size_t i = 0; i < w.size(); ++i) {
    uint64_t x = w[i] ^ o.w[i];
    if (x) return (w[i] >> std::countr_zero(x)) & 1;
  }
  return false;
}

bool square_condition(const Shape &A) {
  const TorusParams &tp = A.tp;
  int V = tp.V();
  for (int v = 0; v < V; ++v) {
    int x = tp.vx(v), y = tp.vy(v);
    int l = A.test(tp.eid(x, y, 0)) + A.test(tp.eid(x + 1, y, 1));
    int r = A.test(tp.eid(x, y, 1)) + A.test(tp.eid(x, y + 1, 0));
    if (l != r) return false;
  }
  return true;
}

bool line_counts(const Shape &A, int a1, int a2) {
  const TorusParams &tp = A.tp;
  for (int y = 0; y < tp.t[1]; ++y) {
    int c = 0;
    for (int x = 0; x < tp.t[0]; ++x) c += A.test(tp.eid(x, y, 0));
    if (c != a1) return false;
  }
  for (int x = 0; x < tp.t[0]; ++x) {
    int c = 0;
    for (int y = 0; y < tp.t[1]; ++y) c += A.test(tp.eid(x, y, 1));
    if (c != a2) return false;
  }
  return true;
}

Shape nu(const HeightFunction &f) {
  Shape A(f.tp);
  for (int e = 0; e < f.tp.E(); ++e)
    if (sgn(f, e) < 0) A.set(e);
  return A;
}

HeightFunction reconstruct_from_shape(const Shape &A, const Rat &base) {
  const TorusParams &tp = A.tp;
  if (!is_shape(A, tp.n[0], tp.n[1]))
    throw GeometryError("reconstruct_from_shape: not a member of N_{t,n}");
  std::vector<Rat> v(tp.V());
  v[0] = base;
  Rat q1 = tp.q(0), q2 = tp.q(1);
  for (int x = 0; x + 1 < tp.t[0]; ++x)
    v[tp.vid(x + 1, 0)] = v[tp.vid(x, 0)] - q1 + 1 - 2 * A.test(tp.eid(x, 0, 0));
  for (int x = 0; x < tp.t[0]; ++x)
    for (int y = 0; y + 1 < tp.t[1]; ++y)
      v[tp.vid(x, y + 1)] =
          v[tp.vid(x, y)] - q2 + 1 - 2 * A.test(tp.eid(x, y, 1));
  return HeightFunction(tp, std::move(v));
}

Rat shape_offset(const Shape &A) {
  HeightFunction f = reconstruct_from_shape(A, 0);
  return average_height(f);
}

int phi(const Shape &A, int e) {
  int axis = A.tp.eaxis(e);
  for (int k = 0; k < A.tp.t[axis]; ++k) {
    if (A.test(e)) return e;
    e = A.tp.eshift(e);
  }
  throw GeometryError("phi: empty line");
}

int psi(const Shape &A, int e) {
  if (!A.test(e)) throw GeometryError("psi: edge not in shape");
  return phi(A, A.tp.eshift(e));
}

int pi12(const Shape &A, int e) {
  if (!A.test(e)) throw GeometryError("pi12: edge not in shape");
  const TorusParams &tp = A.tp;
  int x = tp.vx(tp.ebase(e)), y = tp.vy(tp.ebase(e));
  if (tp.eaxis(e) == 0) {
    int cand = tp.eid(x, y, 1);
    return A.test(cand) ? cand : tp.eid(x, y + 1, 0);
  }
  int cand = tp.eid(x - 1, y + 1, 0);
  return A.test(cand) ? cand : tp.eid(x - 1, y, 1);
}

int pi21(const Shape &A, int e) {
  if (!A.test(e)) throw GeometryError("pi21: edge not in shape");
  const TorusParams &tp = A.tp;
  int x = tp.vx(tp.ebase(e)), y = tp.vy(tp.ebase(e));
  if (tp.eaxis(e) == 0) {
    int cand = tp.eid(x + 1, y - 1, 1);
    return A.test(cand) ? cand : tp.eid(x, y - 1, 0);
  }
  int cand = tp.eid(x, y, 0);
  return A.test(cand) ? cand : tp.eid(x + 1, y, 1);
}

std::vector<std::vector<int>> natural_partition(const Shape &A) {
  std::vector<char> seen(A.tp.E(), 0);
  std::vector<std::vector<int>> cycles;
  for (int e = 0; e < A.tp.E(); ++e) {
    if (!A.test(e) || seen[e]) continue;
    std::vector<int> cyc;
    int cur = e;
    do {
      seen[cur] = 1;
      cyc.push_back(cur);
      cur = pi12(A, cur);
    } while (cur != e);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Shape astar_shape(const TorusParams &tp) {
  Shape A(tp);
  for (int v = 0; v < tp.V(); ++v) {
    if (tp.vx(v) < tp.n[0]) A.set(tp.eid(tp.vx(v), tp.vy(v), 0));
    if (tp.vy(v) < tp.n[1]) A.set(tp.eid(tp.vx(v), tp.vy(v), 1));
  }
  return A;
}

namespace {

// One chi-decreasing flip site per the irreducibility proof: a point z != 0
// with (z,1),(z,2) in A and (z-e1,1),(z-e2,2) not in A, located from an edge
// (y,i) in A with y_i != 0 and (y-e_i,i) not in A.
int find_descent_site(const Shape &A) {
  const TorusParams &tp = A.tp;
  for (int axis = 0; axis < 2; ++axis) {
    int perp = 1 - axis;
    for (int v = 0; v < tp.V(); ++v) {
      int yc = axis == 0 ? tp.vx(v) : tp.vy(v);
      if (yc == 0) continue;
      int e = axis * tp.V() + v;
      if (!A.test(e) || A.test(tp.eshift(e, -1))) continue;
      // smallest n >= 0 with (y + n e_perp, perp) in A
      int n = 0;
      while (!A.test(perp * tp.V() + tp.vshift(v, perp, n))) ++n;
      int z;
      if (n > 0) {
        z = tp.vshift(v, perp, n);
      } else {
        int m = 0;
        while (A.test(perp * tp.V() + tp.vshift(v, perp, -(m + 1)))) ++m;
        z = tp.vshift(v, perp, -m);
      }
      return z;
    }
  }
  return -1;
}

} // namespace

int is_irreducible_reachable(const Shape &A) {
  const TorusParams &tp = A.tp;
  Shape target = astar_shape(tp);
  Shape cur = A;
  int steps = 0;
  while (!(cur == target)) {
    int z = find_descent_site(cur);
    if (z < 0) throw GeometryError("chi descent: no flip site found");
    int zx = tp.vx(z), zy = tp.vy(z);
    if (z == 0 || !cur.test(tp.eid(zx, zy, 0)) || !cur.test(tp.eid(zx, zy, 1)) ||
        cur.test(tp.eid(zx - 1, zy, 0)) || cur.test(tp.eid(zx, zy - 1, 1)))
      throw GeometryError("chi descent: invalid flip site");
    cur.reset(tp.eid(zx, zy, 0));
    cur.reset(tp.eid(zx, zy, 1));
    cur.set(tp.eid(zx - 1, zy, 0));
    cur.set(tp.eid(zx, zy - 1, 1));
    ++steps;
  }
  return steps;
}

std::vector<std::vector<int8_t>> neighbor_delta(const Shape &A, const Shape &B) {
  const TorusParams &tp = A.tp;
  int V = tp.V();
  std::vector<std::vector<int8_t>> out;
  for (int s : {+1, -1}) {
    std::vector<int8_t> delta(V, 0);
    delta[0] = (int8_t)s;
    std::queue<int> bfs;
    bfs.push(0);
    bool ok = true;
    while (ok && !bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int axis = 0; axis < 2 && ok; ++axis) {
        for (int dir : {+1, -1}) {
          int u = tp.vshift(v, axis, dir);
          int e = axis * V + (dir > 0 ? v : u);
          int diff = 2 * dir * (A.test(e) - B.test(e));
          int val = delta[v] + diff;
          if (val != 1 && val != -1) { ok = false; break; }
          if (delta[u] == 0) {
            delta[u] = (int8_t)val;
            bfs.push(u);
          } else if (delta[u] != val) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) out.push_back(std::move(delta));
  }
  return out;
}

std::vector<int8_t> shape_potential(const Shape &A) {
  const TorusParams &tp = A.tp;
  std::vector<int8_t> u(tp.V());
  int8_t acc = 0;
  for (int x = 0; x < tp.t[0]; ++x) {
    u[tp.vid(x, 0)] = acc;
    int8_t col = acc;
    for (int y = 0; y + 1 < tp.t[1]; ++y) {
      col = (int8_t)(col + A.test(tp.eid(x, y, 1)));
      u[tp.vid(x, y + 1)] = col;
    }
    acc = (int8_t)(acc + A.test(tp.eid(x, 0, 0)));
  }
  return u;
}

} // namespace hfw
