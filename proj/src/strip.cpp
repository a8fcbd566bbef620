#include "hfwalk/strip.hpp"

#include <algorithm>
#include <cmath>

#include "hfwalk/graph.hpp"

namespace hfw {

namespace {

// Pairwise-disjointness of closed strips as circular arcs of circumference T.
bool strips_pairwise_disjoint(const std::vector<Strip> &ss, const Rat &T) {
  for (size_t i = 0; i < ss.size(); ++i) {
    if (ss[i].r >= T) return ss.size() <= 1;
    for (size_t j = i + 1; j < ss.size(); ++j) {
      Rat d = rat_mod(ss[i].h - ss[j].h, T);
      if (d > T / 2) d = T - d;
      if (!(d > (ss[i].r + ss[j].r) / 2)) return false;
    }
  }
  return true;
}

// Merge closed arcs [h-r/2, h+r/2] on the circle R/TZ.  Returns arcs with
// lo in [0,T) and hi = lo + length; sets whole if the union is everything.
std::vector<std::pair<Rat, Rat>> merge_arcs(const std::vector<Strip> &ss,
                                            const Rat &T, bool &whole) {
  whole = false;
  std::vector<std::pair<Rat, Rat>> arcs;
  for (const Strip &s : ss) {
    if (s.r >= T) {
      whole = true;
      return {};
    }
    Rat lo = rat_mod(s.h - s.r / 2, T);
    arcs.emplace_back(lo, lo + s.r);
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto &a : arcs) {
    if (!out.empty() && a.first <= out.back().second)
      out.back().second = std::max(out.back().second, a.second);
    else
      out.push_back(a);
  }
  // wrap-around: the last arc may reach past T into the first ones
  while (out.size() > 1 && out.back().second >= out.front().first + T) {
    out.back().second =
        std::max(out.back().second, Rat(out.front().second + T));
    out.erase(out.begin());
  }
  if (!out.empty() && out.back().second - out.back().first >= T) {
    whole = true;
    return {};
  }
  return out;
}

bool arcs_contain(const std::vector<std::pair<Rat, Rat>> &arcs, const Rat &T,
                  const Rat &ell) {
  for (const auto &[lo, hi] : arcs)
    if (rat_mod(ell - lo, T) <= hi - lo) return true;
  return false;
}

// Vertical fracture segments of the loops, bucketed by the unit row
// (rb + 1/2, rb + 3/2) they span; values are the x positions (half-integers).
std::vector<std::vector<Rat>> vertical_segments(const FracturePicture &fp) {
  int t2 = fp.tp.t[1];
  std::vector<std::vector<Rat>> vert(t2);
  for (const Loop &l : fp.loops) {
    auto pts = l.points();
    for (size_t k = 0; k < pts.size(); ++k)
      if (l.moves[k] == 'U')
        vert[(pts[k].second - 1) / 2].push_back(Rat(pts[k].first, 2));
  }
  for (auto &v : vert) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return vert;
}

// Signed length of one horizontal slice: for each maximal gap between
// obstacles (strip-union boundary points and vertical fracture segments),
// the points of the gap inside the strip union contribute +length if the
// obstacle closing the gap on the right is a boundary point and -length if
// it is a fracture segment.
Rat slice_value(const FracturePicture &fp, const std::vector<Rat> &verts,
                const std::vector<Rat> &endpoints, const Rat &K, const Rat &T,
                const Rat &y) {
  const TorusParams &tp = fp.tp;
  Rat sigma = rat_mod(Rat(1, 2) - (y - Rat(1, 2)) * K, T);
  struct Ob {
    Rat x;
    bool bdry;
  };
  std::vector<Ob> obs;
  if (!fp.whole)
    for (const Rat &e : endpoints) {
      Rat x0 = rat_mod(e + sigma, T);
      for (int j = 0; j < tp.d[0]; ++j) obs.push_back({x0 + Rat(j) * T, true});
    }
  for (const Rat &xv : verts) obs.push_back({xv, false});
  std::sort(obs.begin(), obs.end(),
            [](const Ob &a, const Ob &b) { return a.x < b.x; });
  for (size_t i = 1; i < obs.size(); ++i)
    if (obs[i].x == obs[i - 1].x)
      throw SolverError("slice hits an ambiguous obstacle coincidence");
  if (obs.empty()) throw SolverError("slice without obstacles");
  Rat t1(tp.t[0]);
  auto in_union = [&](const Rat &x) {
    if (fp.whole) return true;
    return arcs_contain(fp.arcs, T, rat_mod(x - sigma, T));
  };
  Rat acc = 0;
  size_t n = obs.size();
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    Rat len = (j == 0 ? obs[0].x + t1 : obs[j].x) - obs[i].x;
    if (in_union(obs[i].x + len / 2)) acc += obs[j].bdry ? len : -len;
  }
  return acc;
}

} // namespace

FracturePicture fracture_picture(const Shape &A) {
  FracturePicture fp;
  fp.tp = A.tp;
  fp.loops = to_loops(A);
  for (const Loop &l : fp.loops) fp.strips.push_back(minimal_strip(l));
  fp.arcs = merge_arcs(fp.strips, fp.tp.strip_period(), fp.whole);
  return fp;
}

Rat kappa_strip(const Shape &A) {
  FracturePicture fp = fracture_picture(A);
  const TorusParams &tp = fp.tp;
  Rat T = tp.strip_period();
  Rat K(tp.d[1] * tp.t[0], tp.d[0] * tp.t[1]);
  auto vert = vertical_segments(fp);
  std::vector<Rat> endpoints;
  for (const auto &[lo, hi] : fp.arcs) {
    endpoints.push_back(rat_mod(lo, T));
    endpoints.push_back(rat_mod(hi, T));
  }
  Rat acc = 0;
  for (int rb = 0; rb < tp.t[1]; ++rb) {
    Rat ylo(2 * rb + 1, 2), yhi = ylo + 1;
    std::vector<Rat> cuts = {ylo, yhi};
    // breakpoints: a boundary point crosses a vertical segment
    for (const Rat &e : endpoints)
      for (const Rat &xv : vert[rb]) {
        Rat base = e + Rat(1, 2) - xv;
        Rat mlo = (K * (ylo - Rat(1, 2)) - base) / T;
        for (BigInt m = rat_floor(mlo);; ++m) {
          Rat y = Rat(1, 2) + (base + Rat(m) * T) / K;
          if (y >= yhi) break;
          if (y > ylo) cuts.push_back(y);
        }
      }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    // the slice value is linear between breakpoints, so the midpoint rule
    // integrates it exactly
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rat len = cuts[i + 1] - cuts[i];
      acc += len * slice_value(fp, vert[rb], endpoints, K, T,
                               cuts[i] + len / 2);
    }
  }
  return acc / tp.V();
}

double kappa_raster(const Shape &A, int res, double &tol) {
  FracturePicture fp = fracture_picture(A);
  const TorusParams &tp = fp.tp;
  double T = to_double(tp.strip_period());
  double K = (double)(tp.d[1] * tp.t[0]) / (tp.d[0] * tp.t[1]);
  int t1 = tp.t[0], t2 = tp.t[1];
  auto vert_q = vertical_segments(fp);
  std::vector<std::vector<double>> vert(t2);
  for (int r = 0; r < t2; ++r)
    for (const Rat &x : vert_q[r]) vert[r].push_back(to_double(x));
  std::vector<double> endpoints;
  std::vector<std::pair<double, double>> arcs;
  for (const auto &[lo, hi] : fp.arcs) {
    arcs.emplace_back(to_double(lo), to_double(hi));
    endpoints.push_back(std::fmod(to_double(lo), T));
    endpoints.push_back(std::fmod(to_double(hi), T));
  }
  auto pmod = [](double v, double m) {
    double r = std::fmod(v, m);
    return r < 0 ? r + m : r;
  };
  int nx = t1 * res, ny = t2 * res;
  std::vector<int8_t> lab((size_t)nx * ny, 0);
  for (int j = 0; j < ny; ++j) {
    double y = (j + 0.5) / res;
    int rb = ((int)std::floor(y - 0.5) + t2) % t2;
    double sigma = 0.5 - (y - 0.5) * K;
    for (int i = 0; i < nx; ++i) {
      double x = (i + 0.5) / res;
      bool in = fp.whole;
      double ell = pmod(x - sigma, T);
      for (const auto &[lo, hi] : arcs)
        if (in) break;
        else if (pmod(ell - lo, T) <= hi - lo)
          in = true;
      if (!in) continue;
      double db = 1e300, dv = 1e300;
      for (double e : endpoints) db = std::min(db, pmod(e + sigma - x, T));
      for (double xv : vert[rb]) dv = std::min(dv, pmod(xv - x, (double)t1));
      if (fp.whole) db = 1e300;
      lab[(size_t)j * nx + i] = db < dv ? 1 : -1;
    }
  }
  double cell = 1.0 / ((double)res * res);
  double sum = 0;
  std::vector<char> marked((size_t)nx * ny, 0);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      size_t a = (size_t)j * nx + i;
      sum += lab[a];
      size_t r = (size_t)j * nx + (i + 1) % nx;
      size_t u = (size_t)((j + 1) % ny) * nx + i;
      if (lab[a] != lab[r]) marked[a] = marked[r] = 1;
      if (lab[a] != lab[u]) marked[a] = marked[u] = 1;
    }
  long changed = std::count(marked.begin(), marked.end(), (char)1);
  tol = 2.0 * changed * cell / tp.V();
  return sum * cell / tp.V();
}

bool in_P(const Shape &A, const Shape &B) {
  std::vector<Strip> all;
  for (const Loop &l : to_loops(A)) all.push_back(minimal_strip(l));
  for (const Loop &l : to_loops(B)) all.push_back(minimal_strip(l));
  return all.size() > 1 && strips_pairwise_disjoint(all, A.tp.strip_period());
}

Rat z_closed_form(const Shape &A, const Shape &B) {
  const TorusParams &tp = A.tp;
  Rat T = tp.strip_period();
  std::vector<Strip> sa, sb, all;
  for (const Loop &l : to_loops(A)) sa.push_back(minimal_strip(l));
  for (const Loop &l : to_loops(B)) sb.push_back(minimal_strip(l));
  all = sa;
  all.insert(all.end(), sb.begin(), sb.end());
  if (!strips_pairwise_disjoint(all, T))
    throw GeometryError("closed form requires pairwise disjoint strips");
  auto byh = [](const Strip &x, const Strip &y) { return x.h < y.h; };
  std::sort(sa.begin(), sa.end(), byh);
  std::sort(sb.begin(), sb.end(), byh);
  Rat s = 0;
  for (size_t i = 0; i < sa.size(); ++i) s += sb[i].h - sa[i].h;
  Rat v = Rat(2 * tp.d[0], tp.t[0]) * s;
  if (sa[0].h < sb[0].h) return v - 1;
  return v + 1;
}

Rat z_map(const Shape &A, const Shape &B) {
  if (in_P(A, B)) {
    auto ds = neighbor_delta(A, B);
    if (!(A == B) && ds.size() == 1) return y_direct(A, B);
    return 0;
  }
  return kappa_strip(A) - kappa_strip(B);
}

Rat d_map(const Shape &A, const Shape &B) {
  if (A == B) return 0;
  Rat y = neighbor_delta(A, B).size() == 1 ? y_direct(A, B) : Rat(0);
  return y - z_map(A, B);
}

Shape tau_shape(const Shape &A, const Shape &B) {
  const TorusParams &tp = A.tp;
  Rat T = tp.strip_period();
  std::vector<Loop> alphas = to_loops(A), betas = to_loops(B);
  std::vector<Strip> sa, sb, all;
  for (const Loop &l : alphas) sa.push_back(minimal_strip(l));
  for (const Loop &l : betas) sb.push_back(minimal_strip(l));
  all = sa;
  all.insert(all.end(), sb.begin(), sb.end());
  if (!strips_pairwise_disjoint(all, T))
    throw GeometryError("reflection requires pairwise disjoint strips");
  size_t g = alphas.size();
  std::vector<size_t> ord(g);
  for (size_t i = 0; i < g; ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(),
            [&](size_t i, size_t j) { return sa[i].h < sa[j].h; });
  // first boundary-touch points (doubled coordinates) of each loop of A in
  // canonical order: vhat on the lower strip boundary, what on the upper
  std::vector<std::pair<int, int>> vhat(g), what(g);
  for (size_t oi = 0; oi < g; ++oi) {
    const Loop &l = alphas[ord[oi]];
    auto pts = l.points();
    int64_t cur = 0, lo = 0, hi = 0;
    std::vector<int64_t> vals(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) {
      vals[k] = cur;
      cur += l.moves[k] == 'U' ? 2ll * tp.d[1] * tp.t[0]
                               : -2ll * tp.d[0] * tp.t[1];
      lo = std::min(lo, cur);
      hi = std::max(hi, cur);
    }
    bool vfound = false, wfound = false;
    for (size_t k = 0; k < pts.size(); ++k) {
      if (!vfound && vals[k] == lo) {
        vhat[oi] = pts[k];
        vfound = true;
      }
      if (!wfound && vals[k] == hi) {
        what[oi] = pts[k];
        wfound = true;
      }
    }
  }
  std::vector<Loop> bars;
  for (size_t bi = 0; bi < betas.size(); ++bi) {
    size_t gap = 0;
    if (g > 1) {
      for (size_t i = 0; i < g; ++i) {
        Rat da = rat_mod(sb[bi].h - sa[ord[i]].h, T);
        Rat dn = rat_mod(sa[ord[(i + 1) % g]].h - sa[ord[i]].h, T);
        if (da < dn) {
          gap = i;
          break;
        }
      }
    }
    int cx = what[gap].first + vhat[(gap + 1) % g].first;
    int cy = what[gap].second + vhat[(gap + 1) % g].second;
    const Loop &b = betas[bi];
    Loop bar{tp, ((cx - b.sx) % (2 * tp.t[0]) + 2 * tp.t[0]) % (2 * tp.t[0]),
             ((cy - b.sy) % (2 * tp.t[1]) + 2 * tp.t[1]) % (2 * tp.t[1]),
             std::string(b.moves.rbegin(), b.moves.rend())};
    bars.push_back(bar.canon());
  }
  return from_loops(tp, bars);
}

} // namespace hfw
