// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria.  Every check reports its measured values so a failure is
// diagnosable from the log alone.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "hfwalk/graph.hpp"
#include "hfwalk/hfwalk.h"
#include "hfwalk/io.hpp"
#include "hfwalk/montecarlo.hpp"
#include "hfwalk/verify.hpp"
#include "hfwalk/walk.hpp"

using namespace hfw;

namespace {

int g_failed = 0;

void line(int k, bool pass, const std::string &detail) {
  if (!pass) ++g_failed;
  std::printf("CRITERION %d: %s — %s\n", k, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

template <typename F>
void criterion(int k, F fn) {
  try {
    fn();
  } catch (const std::exception &e) {
    line(k, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

// ---- 1: exact diffusivity trend at n=(1,1) --------------------------------
void c1() {
  std::ostringstream os;
  std::vector<double> gaps;
  os << "n=(1,1) exact gaps to 1/3:";
  for (int p = 2; p <= 6; ++p) {
    DiffusivityReport rep =
        diffusivity_report(TorusParams({p, p}, {1, 1}), 200000);
    gaps.push_back(rep.gap);
    os << " p=" << p << ":" << fmt(rep.gap)
       << (rep.exact ? "" : "(iter)");
  }
  bool shrink = gaps.back() < gaps.front();
  bool mono = true;
  for (size_t i = 2; i < gaps.size(); ++i)
    if (gaps[i] > gaps[i - 1]) mono = false;
  os << (shrink ? "" : "; gap grows instead of shrinking with p")
     << (mono ? "" : "; gaps increase after the first term")
     << "; p=7 (51480 shapes, ~5e8 graph edges) exceeds the memory "
        "budget; the verdict is already settled at p<=6";
  line(1, shrink && mono, os.str());
}

// ---- 2: gcd n = 2 trend toward 1/5 ----------------------------------------
void c2() {
  std::ostringstream os;
  // exact point and MC self-check where enumeration is feasible
  TorusParams tp2({2, 2}, {2, 2});
  DiffusivityReport ex = diffusivity_report(tp2, 200000);
  SimConfig cfg;
  cfg.steps = 150000;
  cfg.seed = 2026;
  DiffusivityEstimate m2 = estimate_diffusivity(tp2, cfg, ex.shape_count);
  bool self_ok = std::abs(m2.sigma2 - ex.sigma2_Xhat) < 3 * m2.se;
  os << "n=(2,2) exact p=2: " << fmt(ex.sigma2_Xhat) << ", MC "
     << fmt(m2.sigma2) << "±" << fmt(m2.se)
     << (self_ok ? "" : " (outside 3 SE)") << "; MC sigma2:";
  std::vector<double> s2;
  for (int p : {4, 8, 16}) {
    SimConfig c;
    c.steps = p <= 8 ? 150000 : 60000;
    c.seed = 2026;
    DiffusivityEstimate e =
        estimate_diffusivity(TorusParams({p, p}, {2, 2}), c);
    s2.push_back(e.sigma2);
    os << " p=" << p << ":" << fmt(e.sigma2) << "±" << fmt(e.se);
  }
  bool trend = std::abs(s2.back() - 0.2) < std::abs(s2.front() - 0.2);
  os << "; |gap to 1/5| " << (trend ? "shrinks" : "does not shrink")
     << " from p=4 to p=16";
  line(2, self_ok && trend, os.str());
}

// ---- 3: exact corrector drift is identically zero up to t=(5,5) -----------
void c3() {
  std::ostringstream os;
  bool ok = true;
  os << "n=(1,1) exact drift residuals:";
  for (int p = 1; p <= 4; ++p) {
    ShapeGraph G = build_shape_graph(TorusParams({p, p}, {1, 1}), 200000);
    Corrector c = solve_corrector(G);
    if (!c.exact) {
      ok = false;
      os << " t=" << p + 1 << ":not-exact";
      continue;
    }
    bool zero = true;
    for (const Rat &r : drift_residuals(G, c)) zero = zero && r == 0;
    ok = ok && zero;
    os << " t=" << p + 1 << ":" << (zero ? "all-zero" : "NONZERO");
  }
  line(3, ok, os.str());
}

// ---- 4: oracle equivalences at t=(3,3) and t=(4,4) ------------------------
void c4() {
  std::ostringstream os;
  bool ok = true;
  for (int p : {2, 3}) {
    std::vector<SuiteResult> rs;
    for (const char *s : {"bijection", "lemma8", "lemma9", "counts"})
      for (SuiteResult &r :
           run_verify(TorusParams({p, p}, {1, 1}), s, 1, 200))
        rs.push_back(std::move(r));
    int64_t checked = 0, failed = 0;
    for (const SuiteResult &r : rs) {
      checked += r.checked;
      failed += r.failed;
      if (r.skipped || r.checked == 0) ok = false;
    }
    ok = ok && failed == 0;
    os << "t=(" << p + 1 << "," << p + 1 << "): " << checked
       << " checks, " << failed << " failed; ";
  }
  line(4, ok, os.str());
}

// ---- 5: strip-corrector identities at t=(5,5) -----------------------------
void c5() {
  std::ostringstream os;
  bool ok = true;
  for (const char *s : {"lemma20", "lemma21"}) {
    auto rs = run_verify(TorusParams({4, 4}, {1, 1}), s, 1, 200);
    for (const SuiteResult &r : rs) {
      ok = ok && !r.skipped && r.checked > 0 && r.failed == 0;
      os << r.suite << ": " << r.checked << " checks, " << r.failed
         << " failed; ";
    }
  }
  line(5, ok, os.str());
}

// ---- 6: loop-space count formula at t=(2,2) and t=(3,3) -------------------
void c6() {
  std::ostringstream os;
  bool ok = true;
  for (int p : {1, 2}) {
    TorusParams tp({p, p}, {1, 1});
    BigInt bound = loop_count_bound(tp);
    size_t n = enumerate_loops(tp, 100000).size();
    ok = ok && BigInt(n) == bound;
    os << "t=(" << p + 1 << "," << p + 1 << "): formula " << bound.str()
       << " vs enumerated " << n << "; ";
  }
  line(6, ok, os.str());
}

// ---- 7: strip statistics trends over p = 10..80 ---------------------------
void c7() {
  std::ostringstream os;
  std::vector<StripStatistics> st;
  std::vector<double> eps = {0.25};
  for (int p : {10, 20, 40, 80}) {
    Rng rng(derive_seed(7, p));
    st.push_back(strip_statistics(TorusParams({p, p}, {1, 1}), 100000, eps,
                                  rng));
  }
  bool rmono = true, ksmono = true, dmono = true;
  os << "r<=0.25 frac / KS(h) / disjoint:";
  for (size_t i = 0; i < st.size(); ++i) {
    if (i > 0) {
      rmono = rmono && st[i].r_fraction[0] >= st[i - 1].r_fraction[0];
      ksmono = ksmono && st[i].ks_h < st[i - 1].ks_h;
      dmono = dmono && st[i].disjoint_fraction > st[i - 1].disjoint_fraction;
    }
    os << " " << fmt(st[i].r_fraction[0]) << "/" << fmt(st[i].ks_h) << "/"
       << fmt(st[i].disjoint_fraction);
  }
  os << (rmono ? "" : "; width fraction not monotone")
     << (ksmono ? "" : "; KS not decreasing")
     << (dmono ? "" : "; disjoint frequency not increasing");
  line(7, rmono && ksmono && dmono, os.str());
}

// ---- 8: simplex integrals and interleaving constants ----------------------
void c8() {
  std::ostringstream os;
  bool ok = true;
  double fact[8] = {1, 1, 2, 6, 24, 120, 720, 5040};
  for (int g = 1; g <= 3; ++g) {
    Rng rng(derive_seed(8, g));
    SimplexIntegralEstimate e = simplex_integral_check(g, 1000000, rng);
    double ct = 1.0 / (2 * g + 1), ot = 1.0 / fact[2 * g];
    bool cok = std::abs(e.conditional - ct) < 3 * e.cond_se;
    bool ook = std::abs(e.order_prob - ot) < 3 * e.order_se;
    ok = ok && cok && ook;
    os << "g=" << g << " cond " << fmt(e.conditional) << (cok ? "" : "(!)")
       << " order " << fmt(e.order_prob) << (ook ? "" : "(!)") << "; ";
  }
  // interleaving 2/binom(2g,g), conditioned on pairwise disjoint strips;
  // tori large enough that the conditioning event has usable mass
  struct Pt { int g, p, n; int64_t samples; };
  for (Pt pt : {Pt{1, 40, 1, 4000}, Pt{2, 800, 2, 20000},
                Pt{3, 2000, 3, 20000}}) {
    Rng rng(derive_seed(88, pt.g));
    CountingConstantEstimate c = counting_constant_check(
        TorusParams({pt.p, pt.p}, {pt.n, pt.n}), pt.samples, rng);
    double target = pt.g == 1 ? 1.0 : (pt.g == 2 ? 1.0 / 3 : 1.0 / 10);
    bool iok = c.conditioned > 200 &&
               std::abs(c.value - target) <= 3 * std::max(c.se, 1e-12);
    ok = ok && iok;
    os << "g=" << pt.g << " interleave " << fmt(c.value) << "±" << fmt(c.se)
       << (iok ? "" : "(!)") << "; ";
  }
  line(8, ok, os.str());
}

// ---- 9: chain consistency at t=(4,4) --------------------------------------
void c9() {
  std::ostringstream os;
  TorusParams tp({3, 3}, {1, 1});
  ShapeGraph G = build_shape_graph(tp, 200000);
  double mass = (double)(G.M() + G.S());
  Rng rng(derive_seed(9, 0));
  Shape A = astar_shape(tp);
  for (int i = 0; i < 2000; ++i) walk_step(A, rng);
  const int64_t N = 150000;
  int64_t same = 0;
  for (int64_t i = 0; i < N; ++i) {
    Shape before = A;
    walk_step(A, rng);
    same += before == A;
  }
  double ps = 2.0 * G.S() / mass;
  double dev = std::abs(same - N * ps) / std::sqrt(N * ps * (1 - ps));
  bool same_ok = dev < 3;
  os << "same-shape freq " << fmt((double)same / N) << " vs " << fmt(ps)
     << " (" << fmt(dev) << " sigma); ";
  // stationary frequencies on a thinned chain (near-independent draws)
  const int64_t D = 30000, thin = 50;
  std::vector<int64_t> cnt(G.S(), 0);
  for (int64_t i = 0; i < D; ++i) {
    for (int j = 0; j < thin; ++j) walk_step(A, rng);
    ++cnt[G.find(A)];
  }
  double worst = 0;
  for (int a = 0; a < G.S(); ++a) {
    double pi = (G.deg(a) + 2.0) / mass;
    worst = std::max(worst, std::abs(cnt[a] - D * pi) /
                                std::sqrt(D * pi * (1 - pi)));
  }
  bool freq_ok = worst < 4;
  os << "stationary worst deviation " << fmt(worst) << " sigma over "
     << G.S() << " shapes";
  line(9, same_ok && freq_ok, os.str());
}

// ---- 10: byte-identical artifacts under a fixed seed ----------------------
void c10() {
  hfw_ctx *ctx = hfw_ctx_new();
  bool ok = ctx != nullptr;
  std::ostringstream os;
  auto twice = [&](const char *name, auto fn) {
    char *a = nullptr, *b = nullptr;
    int ra = fn(&a), rb = fn(&b);
    bool same = ra == 0 && rb == 0 && a && b && std::strcmp(a, b) == 0;
    hfw_string_free(a);
    hfw_string_free(b);
    ok = ok && same;
    os << name << (same ? " identical; " : " DIFFERS; ");
  };
  twice("simulate", [&](char **o) {
    return hfw_simulate_json(ctx, 2, 2, 1, 1, 20000, 2, 500, 0, 11, o);
  });
  twice("sample-loops", [&](char **o) {
    return hfw_sample_loops_json(ctx, 12, 12, 1, 1, 5000, 12, o);
  });
  twice("verify", [&](char **o) {
    return hfw_verify_json(ctx, 3, 3, 1, 1, "lemma9", 13, 50, o);
  });
  twice("render", [&](char **o) {
    return hfw_render_svg(ctx, 6, 6, 2, 2, -1, 14, 100000, o);
  });
  twice("sweep", [&](char **o) {
    static const int plist[] = {2, 2, 3, 3};
    return hfw_sweep_csv(ctx, plist, 2, 1, 1, 100000, o);
  });
  hfw_ctx_free(ctx);
  line(10, ok, os.str());
}

} // namespace

int main() {
  criterion(1, c1);
  criterion(2, c2);
  criterion(3, c3);
  criterion(4, c4);
  criterion(5, c5);
  criterion(6, c6);
  criterion(7, c7);
  criterion(8, c8);
  criterion(9, c9);
  criterion(10, c10);
  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed;
}
