#include "hfwalk/loop.hpp"

#include <algorithm>
#include <unordered_set>

namespace hfw {

std::vector<std::pair<int, int>> Loop::points() const {
  std::vector<std::pair<int, int>> pts;
  pts.reserve(moves.size());
  int x = sx, y = sy;
  int mx = 2 * tp.t[0], my = 2 * tp.t[1];
  for (char m : moves) {
    pts.emplace_back(x, y);
    if (m == 'U')
      y = (y + 2) % my;
    else
      x = (x - 2 + mx) % mx;
  }
  return pts;
}

Loop Loop::canon() const {
  auto pts = points();
  size_t n = moves.size();
  Loop best = *this;
  for (size_t k = 1; k < n; ++k) {
    Loop cand{tp, pts[k].first, pts[k].second,
              moves.substr(k) + moves.substr(0, k)};
    if (cand < best) best = cand;
  }
  return best;
}

bool is_in_K(const Loop &l) {
  if ((int)l.moves.size() != l.tp.loop_len()) return false;
  int up = 0, left = 0;
  for (char m : l.moves) {
    if (m == 'U')
      ++up;
    else if (m == 'L')
      ++left;
    else
      return false;
  }
  if (up != l.tp.loop_up_moves() || left != l.tp.loop_left_moves())
    return false;
  return l.sx % 2 == 1 && l.sy % 2 == 1 && l.sx >= 0 && l.sx < 2 * l.tp.t[0] &&
         l.sy >= 0 && l.sy < 2 * l.tp.t[1];
}

namespace {

// Edge crossed by the move starting at doubled point (a,b).
int move_edge(const TorusParams &tp, int a, int b, char m) {
  int x = (a - 1) / 2;
  if (m == 'U') return tp.eid(x, (b + 1) / 2, 0);
  return tp.eid(x, (b - 1) / 2, 1);
}

struct Visit {
  char arrive, depart;
  bool straight() const { return arrive == depart; }
};

// Per-vertex visit lists for a set of loops (doubled point (2x+1,2y+1) is
// identified with vertex (x,y)).
void collect_visits(const std::vector<const Loop *> &loops,
                    std::vector<std::vector<Visit>> &visits) {
  for (const Loop *l : loops) {
    auto pts = l->points();
    size_t n = pts.size();
    for (size_t k = 0; k < n; ++k) {
      int v = l->tp.vid((pts[k].first - 1) / 2, (pts[k].second - 1) / 2);
      visits[v].push_back(
          Visit{l->moves[(k + n - 1) % n], l->moves[k]});
    }
  }
}

bool loops_valid(const TorusParams &tp, const std::vector<const Loop *> &loops) {
  std::vector<char> edge_seen(tp.E(), 0);
  for (const Loop *l : loops) {
    auto pts = l->points();
    for (size_t k = 0; k < pts.size(); ++k) {
      int e = move_edge(tp, pts[k].first, pts[k].second, l->moves[k]);
      if (edge_seen[e]) return false; // type (b): shared segment
      edge_seen[e] = 1;
    }
  }
  std::vector<std::vector<Visit>> visits(tp.V());
  collect_visits(loops, visits);
  for (auto &vs : visits) {
    if (vs.size() < 2) continue;
    for (auto &v : vs)
      if (v.straight()) return false; // type (a): straight passage at a crossing
  }
  return true;
}

} // namespace

bool simple_up_to_touches(const Loop &l) {
  return loops_valid(l.tp, {&l});
}

bool disjoint_up_to_touches(const Loop &a, const Loop &b) {
  if (!loops_valid(a.tp, {&a, &b})) return false;
  // reject shared segments / straight passages only when both loops are
  // involved; each loop's own simplicity is a separate question
  return true;
}

std::vector<Loop> to_loops(const Shape &A) {
  const TorusParams &tp = A.tp;
  std::vector<Loop> out;
  for (const auto &cyc : natural_partition(A)) {
    Loop l;
    l.tp = tp;
    l.moves.reserve(cyc.size());
    int px = -1, py = -1;
    for (int e : cyc) {
      int x = tp.vx(tp.ebase(e)), y = tp.vy(tp.ebase(e));
      int a, b;
      char m;
      if (tp.eaxis(e) == 0) {
        a = 2 * x + 1;
        b = (2 * y - 1 + 2 * tp.t[1]) % (2 * tp.t[1]);
        m = 'U';
      } else {
        a = 2 * x + 1;
        b = 2 * y + 1;
        m = 'L';
      }
      if (l.moves.empty()) {
        l.sx = a;
        l.sy = b;
      } else if (a != px || b != py) {
        throw GeometryError("to_loops: discontinuous fracture path");
      }
      l.moves.push_back(m);
      px = m == 'U' ? a : (a - 2 + 2 * tp.t[0]) % (2 * tp.t[0]);
      py = m == 'U' ? (b + 2) % (2 * tp.t[1]) : b;
    }
    if (px != l.sx || py != l.sy)
      throw GeometryError("to_loops: fracture path does not close");
    out.push_back(l.canon());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Shape from_loops(const TorusParams &tp, const std::vector<Loop> &loops) {
  if (loops.empty()) throw GeometryError("from_loops: no loops");
  std::vector<const Loop *> ptrs;
  for (const Loop &l : loops) {
    if (!is_in_K(l)) throw GeometryError("from_loops: loop not in K");
    ptrs.push_back(&l);
  }
  if (!loops_valid(tp, ptrs))
    throw GeometryError("from_loops: loops overlap beyond touches");
  Shape A(tp);
  for (const Loop &l : loops) {
    auto pts = l.points();
    for (size_t k = 0; k < pts.size(); ++k)
      A.set(move_edge(tp, pts[k].first, pts[k].second, l.moves[k]));
  }
  int L = (int)loops.size();
  if (!is_shape(A, L * tp.d[0], L * tp.d[1]))
    throw GeometryError("from_loops: union is not a valid shape");
  return A;
}

Strip minimal_strip(const Loop &l) {
  const TorusParams &tp = l.tp;
  // ell-functional, scaled by 2*d1*t2 to stay integral: UP moves add
  // 2*d2*t1, LEFT moves subtract 2*d1*t2; period scales to 2*t1*t2.
  int64_t scale = 2ll * tp.d[0] * tp.t[1];
  int64_t pscaled = 2ll * tp.t[0] * tp.t[1];
  int64_t cur = (int64_t)(l.sx - 1) * tp.d[0] * tp.t[1] +
                (int64_t)(l.sy - 1) * tp.d[1] * tp.t[0];
  int64_t lo = cur, hi = cur;
  for (char m : l.moves) {
    if (m == 'U')
      cur += 2ll * tp.d[1] * tp.t[0];
    else
      cur -= 2ll * tp.d[0] * tp.t[1];
    lo = std::min(lo, cur);
    hi = std::max(hi, cur);
  }
  if (hi - lo >= pscaled) return Strip{Rat(0), tp.strip_period()};
  Rat r(hi - lo, scale);
  Rat h = rat_mod(Rat(lo + hi, 2 * scale), tp.strip_period());
  return Strip{h, r};
}

Loop zeta(const TorusParams &tp, int sx, int sy, const std::vector<int> &steps) {
  int up = 0, left = 0;
  std::string moves;
  moves.reserve(steps.size());
  for (int s : steps) {
    if (s == 1) {
      ++up;
      moves.push_back('U');
    } else if (s == -1) {
      ++left;
      moves.push_back('L');
    } else {
      throw ParamError("zeta: steps must be +-1");
    }
  }
  if (up != tp.loop_up_moves() || left != tp.loop_left_moves())
    throw ParamError("zeta: wrong walk signature");
  if (sx % 2 != 1 || sy % 2 != 1)
    throw ParamError("zeta: start must be a half-integer point");
  return Loop{tp, sx, sy, moves};
}

Loop sample_loop(const TorusParams &tp, Rng &rng) {
  int sx = 2 * (int)rand_below(rng, tp.t[0]) + 1;
  int sy = 2 * (int)rand_below(rng, tp.t[1]) + 1;
  std::vector<int> steps(tp.loop_up_moves(), 1);
  steps.resize(tp.loop_len(), -1);
  fisher_yates(steps, rng);
  return zeta(tp, sx, sy, steps);
}

BigInt loop_count_bound(const TorusParams &tp) {
  int n = tp.loop_len(), k = tp.loop_up_moves();
  BigInt binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return BigInt(tp.t[0]) * tp.t[1] * binom / n;
}

std::vector<Loop> enumerate_loops(const TorusParams &tp, int64_t cap) {
  BigInt bound = loop_count_bound(tp);
  if (bound > cap)
    throw BudgetError("loop-count bound " + bound.str() +
                      " exceeds enumeration cap " + std::to_string(cap));
  std::string word(tp.loop_left_moves(), 'L');
  word.resize(tp.loop_len(), 'U');
  std::sort(word.begin(), word.end());
  std::unordered_set<Loop, LoopHash> seen;
  do {
    for (int x = 0; x < tp.t[0]; ++x)
      for (int y = 0; y < tp.t[1]; ++y)
        seen.insert(Loop{tp, 2 * x + 1, 2 * y + 1, word}.canon());
  } while (std::next_permutation(word.begin(), word.end()));
  std::vector<Loop> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Shape> enumerate_shapes(const TorusParams &tp, int64_t cap) {
  std::vector<Loop> loops = enumerate_loops(tp, cap);
  std::vector<Loop> simple;
  for (const Loop &l : loops)
    if (simple_up_to_touches(l)) simple.push_back(l);
  int g = tp.g;
  std::vector<Shape> shapes;
  if (g == 1) {
    for (const Loop &l : simple) shapes.push_back(from_loops(tp, {l}));
  } else {
    // pairwise-compatibility bitsets, then size-g clique enumeration
    int m = (int)simple.size();
    int words = (m + 63) / 64;
    std::vector<uint64_t> compat((size_t)m * words, 0);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (disjoint_up_to_touches(simple[i], simple[j])) {
          compat[(size_t)i * words + j / 64] |= uint64_t(1) << (j % 64);
          compat[(size_t)j * words + i / 64] |= uint64_t(1) << (i % 64);
        }
    std::vector<int> pick;
    std::vector<Loop> sel;
    auto dfs = [&](auto &&self, int depth, std::vector<uint64_t> avail) -> void {
      if (depth == g) {
        sel.clear();
        for (int i : pick) sel.push_back(simple[i]);
        shapes.push_back(from_loops(tp, sel));
        if ((int64_t)shapes.size() > cap)
          throw BudgetError("shape count exceeds enumeration cap " +
                            std::to_string(cap));
        return;
      }
      int start = pick.empty() ? 0 : pick.back() + 1;
      for (int i = start; i < m; ++i) {
        if (!((avail[i / 64] >> (i % 64)) & 1)) continue;
        std::vector<uint64_t> next(words);
        for (int wd = 0; wd < words; ++wd)
          next[wd] = avail[wd] & compat[(size_t)i * words + wd];
        pick.push_back(i);
        self(self, depth + 1, std::move(next));
        pick.pop_back();
      }
    };
    std::vector<uint64_t> all(words, ~uint64_t(0));
    if (m % 64) all[words - 1] = (uint64_t(1) << (m % 64)) - 1;
    dfs(dfs, 0, all);
  }
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

} // namespace hfw
