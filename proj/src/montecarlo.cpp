#include "hfwalk/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "hfwalk/loop.hpp"

namespace hfw {

WalkState make_state(const TorusParams &tp) {
  return WalkState{astar_shape(tp), 0};
}

double step_walk(WalkState &st, Rng &rng) {
  DeltaSampler s(st.shape);
  std::vector<RowMask> rows = s.sample(rng);
  st.anchor += (rows[0] & 1) ? 1 : -1;
  return apply_labeling(st.shape, rows);
}

DiffusivityEstimate estimate_diffusivity(const TorusParams &tp,
                                         const SimConfig &cfg,
                                         int64_t shape_count) {
  if (cfg.steps <= 0 || cfg.runs <= 0)
    throw ParamError("simulation lengths must be positive");
  DiffusivityEstimate est;
  est.steps = cfg.steps;
  est.runs = cfg.runs;
  est.burn_in = cfg.burn_in >= 0
                    ? cfg.burn_in
                    : (shape_count >= 0 ? 50 * shape_count : 100000);
  est.window =
      cfg.window > 0 ? cfg.window : (int64_t)std::sqrt((double)cfg.steps);
  if (est.window < 1) est.window = 1;
  int64_t batches_per_run = cfg.steps / est.window;
  if ((int64_t)cfg.runs * batches_per_run < 2)
    throw ParamError("too few batches for a standard error");
  double s1 = 0, s2 = 0;
  int64_t B = 0;
  for (int r = 0; r < cfg.runs; ++r) {
    Rng rng(derive_seed(cfg.seed, r));
    WalkState st = make_state(tp);
    for (int64_t i = 0; i < est.burn_in; ++i) step_walk(st, rng);
    for (int64_t b = 0; b < batches_per_run; ++b) {
      double y = 0;
      for (int64_t i = 0; i < est.window; ++i) y += step_walk(st, rng);
      double v = y * y / est.window;
      s1 += v;
      s2 += v * v;
      ++B;
    }
  }
  est.batches = (int)B;
  est.sigma2 = s1 / B;
  est.se = std::sqrt(std::max(0.0, s2 / B - est.sigma2 * est.sigma2) /
                     (B - 1));
  return est;
}

StripStatistics strip_statistics(const TorusParams &tp, int64_t samples,
                                 const std::vector<double> &eps_list,
                                 Rng &rng) {
  StripStatistics out;
  out.samples = samples;
  out.eps = eps_list;
  out.r_fraction.assign(eps_list.size(), 0.0);
  double period = to_double(tp.strip_period());
  std::vector<double> hs;
  hs.reserve(samples);
  for (int64_t i = 0; i < samples; ++i) {
    Strip s = minimal_strip(sample_loop(tp, rng));
    double rn = to_double(s.r) / period;
    for (size_t e = 0; e < eps_list.size(); ++e)
      if (rn <= eps_list[e]) out.r_fraction[e] += 1;
    hs.push_back(to_double(s.h) / period);
  }
  for (double &f : out.r_fraction) f /= samples;
  std::sort(hs.begin(), hs.end());
  double ks = 0;
  for (size_t i = 0; i < hs.size(); ++i) {
    ks = std::max(ks, hs[i] - (double)i / hs.size());
    ks = std::max(ks, (double)(i + 1) / hs.size() - hs[i]);
  }
  out.ks_h = ks;
  int64_t disj = 0;
  int m = 2 * tp.g;
  Rat T = tp.strip_period();
  for (int64_t i = 0; i < samples; ++i) {
    std::vector<Strip> ss;
    for (int k = 0; k < m; ++k)
      ss.push_back(minimal_strip(sample_loop(tp, rng)));
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (ss[a].r >= T) ok = false;
      for (int b = a + 1; b < m && ok; ++b) {
        Rat dd = rat_mod(ss[a].h - ss[b].h, T);
        if (dd > T / 2) dd = T - dd;
        if (!(dd > (ss[a].r + ss[b].r) / 2)) ok = false;
      }
    }
    disj += ok;
  }
  out.disjoint_fraction = (double)disj / samples;
  return out;
}

double gate_concentration_check(int x, int y, const Rat &eps, int64_t samples,
                                Rng &rng) {
  if (x < 1 || y < 1) throw ParamError("walk step counts must be positive");
  std::vector<int> steps(x + y, 1);
  std::fill(steps.begin() + x, steps.end(), -1);
  Rat bound = Rat((int64_t)x * y) * eps; // |(x+y) w_k - k(x-y)| <= xy eps
  int64_t hits = 0;
  for (int64_t s = 0; s < samples; ++s) {
    fisher_yates(steps, rng);
    int64_t w = 0;
    bool ok = true;
    for (int k = 1; k <= x + y && ok; ++k) {
      w += steps[k - 1];
      int64_t dev = w * (x + y) - (int64_t)k * (x - y);
      if (Rat(dev < 0 ? -dev : dev) > bound) ok = false;
    }
    hits += ok;
  }
  return (double)hits / samples;
}

SimplexIntegralEstimate simplex_integral_check(int g, int64_t samples,
                                               Rng &rng) {
  if (g < 1) throw ParamError("g must be positive");
  SimplexIntegralEstimate est;
  double f1 = 0, f2 = 0, c1 = 0, c2 = 0;
  int64_t hits = 0;
  for (int64_t s = 0; s < samples; ++s) {
    std::vector<double> I(g), J(g);
    for (int i = 0; i < g; ++i) I[i] = rand_unit(rng);
    for (int i = 0; i < g; ++i) J[i] = rand_unit(rng);
    bool ord = true;
    double prev = -1, diff = 0;
    for (int i = 0; i < g && ord; ++i) {
      if (!(prev < I[i] && I[i] < J[i])) ord = false;
      prev = J[i];
      diff += J[i] - I[i];
    }
    double v = 0;
    if (ord) {
      double u = 1 - 2 * diff;
      v = u * u;
      ++hits;
      c1 += v;
      c2 += v * v;
    }
    f1 += v;
    f2 += v * v;
  }
  est.full = f1 / samples;
  est.full_se = std::sqrt(
      std::max(0.0, f2 / samples - est.full * est.full) / (samples - 1));
  est.order_prob = (double)hits / samples;
  est.order_se = std::sqrt(est.order_prob * (1 - est.order_prob) /
                           (samples - 1));
  if (hits > 1) {
    est.conditional = c1 / hits;
    est.cond_se = std::sqrt(
        std::max(0.0, c2 / hits - est.conditional * est.conditional) /
        (hits - 1));
  }
  return est;
}

CountingConstantEstimate counting_constant_check(const TorusParams &tp,
                                                 int64_t samples, Rng &rng) {
  CountingConstantEstimate est;
  int g = tp.g, m = 2 * g;
  Rat T = tp.strip_period();
  int64_t inter = 0;
  for (int64_t s = 0; s < samples; ++s) {
    // family label 0 for the first g draws, 1 for the last g
    std::vector<std::pair<Rat, int>> hv;
    std::vector<Strip> ss;
    for (int k = 0; k < m; ++k) {
      Strip st = minimal_strip(sample_loop(tp, rng));
      ss.push_back(st);
      hv.emplace_back(st.h, k < g ? 0 : 1);
    }
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (ss[a].r >= T) ok = false;
      for (int b = a + 1; b < m && ok; ++b) {
        Rat dd = rat_mod(ss[a].h - ss[b].h, T);
        if (dd > T / 2) dd = T - dd;
        if (!(dd > (ss[a].r + ss[b].r) / 2)) ok = false;
      }
    }
    if (!ok) continue;
    ++est.conditioned;
    std::sort(hv.begin(), hv.end());
    bool alt = true;
    for (int k = 1; k < m; ++k)
      if (hv[k].second == hv[k - 1].second) alt = false;
    inter += alt;
  }
  if (est.conditioned > 1) {
    est.value = (double)inter / est.conditioned;
    est.se = std::sqrt(est.value * (1 - est.value) / (est.conditioned - 1));
  }
  return est;
}

} // namespace hfw
