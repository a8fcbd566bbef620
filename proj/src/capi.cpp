#include "hfwalk/hfwalk.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hfwalk/io.hpp"
#include "hfwalk/walk.hpp"

struct hfw_ctx {
  std::string error;
};

namespace {

using namespace hfw;

char *dup_string(const std::string &s) {
  char *out = (char *)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

// Runs fn, which fills *out; maps exceptions to status codes.
template <typename F>
int guarded(hfw_ctx *ctx, char **out, F fn) {
  if (!ctx || !out) return 2;
  *out = nullptr;
  ctx->error.clear();
  try {
    return fn();
  } catch (const ParamError &e) {
    ctx->error = e.what();
    return 2;
  } catch (const BudgetError &e) {
    ctx->error = e.what();
    return 3;
  } catch (const std::exception &e) {
    ctx->error = e.what();
    return 1;
  }
}

TorusParams make_params(int p1, int p2, int n1, int n2) {
  return TorusParams({p1, p2}, {n1, n2});
}

} // namespace

extern "C" {

hfw_ctx *hfw_ctx_new(void) { return new (std::nothrow) hfw_ctx; }

void hfw_ctx_free(hfw_ctx *ctx) { delete ctx; }

const char *hfw_last_error(const hfw_ctx *ctx) {
  return ctx ? ctx->error.c_str() : "null context";
}

void hfw_string_free(char *s) { std::free(s); }

int hfw_params_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                    char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    Json j = envelope("params", &tp, nullptr);
    j["loop_count"] = loop_count_bound(tp).str();
    j["loop_len"] = tp.loop_len();
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_enumerate_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                       int64_t cap, char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    std::vector<Shape> shapes = enumerate_shapes(tp, cap);
    Json j = envelope("enumerate", &tp, nullptr);
    j["shape_count"] = (int64_t)shapes.size();
    Json arr = Json::array();
    for (const Shape &A : shapes) arr.push_back(shape_json(A));
    j["shapes"] = std::move(arr);
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_graph_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2, int64_t cap,
                   char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    ShapeGraph G = build_shape_graph(tp, cap);
    int mind = G.S() ? G.deg(0) : 0, maxd = 0;
    for (int a = 0; a < G.S(); ++a) {
      mind = std::min(mind, G.deg(a));
      maxd = std::max(maxd, G.deg(a));
    }
    Json j = envelope("graph", &tp, nullptr);
    j["shape_count"] = (int64_t)G.S();
    j["edge_count"] = G.M();
    j["min_degree"] = mind;
    j["max_degree"] = maxd;
    j["connected"] = G.connected();
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_exact_sigma_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                         int64_t cap, char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    DiffusivityReport rep = diffusivity_report(tp, cap);
    Json j = envelope("exact-sigma", &tp, nullptr);
    j.update(report_json(rep));
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_sweep_csv(hfw_ctx *ctx, const int *plist, int np, int n1, int n2,
                  int64_t cap, char **out) {
  return guarded(ctx, out, [&]() {
    if (!plist || np < 1) throw ParamError("empty sweep list");
    std::string csv = sweep_csv_header();
    for (int i = 0; i < np; ++i) {
      TorusParams tp = make_params(plist[2 * i], plist[2 * i + 1], n1, n2);
      csv += sweep_csv_row(diffusivity_report(tp, cap));
    }
    *out = dup_string(csv);
    return 0;
  });
}

int hfw_simulate_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                      int64_t steps, int runs, int64_t burn_in,
                      int64_t window, uint64_t seed, char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    SimConfig cfg;
    cfg.steps = steps;
    cfg.runs = runs;
    cfg.burn_in = burn_in;
    cfg.window = window;
    cfg.seed = seed;
    DiffusivityEstimate est = estimate_diffusivity(tp, cfg);
    Json j = envelope("simulate", &tp, &seed);
    j.update(estimate_json(est));
    j["limit_value"] = 1.0 / (1 + 2 * tp.g);
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_sample_loops_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                          int64_t samples, uint64_t seed, char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    if (samples < 1) throw ParamError("samples must be positive");
    Rng rng(derive_seed(seed, 0));
    std::vector<double> eps = {0.125, 0.25, 0.5};
    StripStatistics st = strip_statistics(tp, samples, eps, rng);
    Json j = envelope("sample-loops", &tp, &seed);
    j.update(strip_stats_json(st));
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_verify_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                    const char *suite, uint64_t seed, int64_t samples,
                    char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    if (!suite) throw ParamError("null suite name");
    std::vector<SuiteResult> rs = run_verify(tp, suite, seed, samples);
    Json j = envelope("verify", &tp, &seed);
    j["suites"] = suites_json(rs);
    int64_t failed = 0;
    for (const SuiteResult &r : rs) failed += r.failed;
    j["failed"] = failed;
    *out = dup_string(dump(j));
    if (failed > 0) {
      ctx->error = "verification failures: " + std::to_string(failed);
      return 4;
    }
    return 0;
  });
}

int hfw_integral_check_json(hfw_ctx *ctx, int g, int64_t samples,
                            uint64_t seed, int p1, int p2, int n1, int n2,
                            char **out) {
  return guarded(ctx, out, [&]() {
    if (samples < 2) throw ParamError("samples must be at least 2");
    Rng rng(derive_seed(seed, 0));
    SimplexIntegralEstimate est = simplex_integral_check(g, samples, rng);
    Json j = envelope("integral-check", nullptr, &seed);
    j["g"] = g;
    j["simplex"] = simplex_json(est);
    if (p1 > 0) {
      TorusParams tp = make_params(p1, p2, n1, n2);
      if (tp.g != g)
        throw ParamError("torus gcd(n) does not match the requested g");
      Rng rng2(derive_seed(seed, 1));
      j["params"] = params_json(tp);
      j["interleaving"] =
          counting_json(counting_constant_check(tp, samples, rng2));
    }
    *out = dup_string(dump(j));
    return 0;
  });
}

int hfw_render_svg(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                   int64_t shape_index, uint64_t seed, int64_t cap,
                   char **out) {
  return guarded(ctx, out, [&]() {
    TorusParams tp = make_params(p1, p2, n1, n2);
    Shape A(tp);
    if (shape_index >= 0) {
      std::vector<Shape> shapes = enumerate_shapes(tp, cap);
      if (shape_index >= (int64_t)shapes.size())
        throw ParamError("shape index out of range");
      A = shapes[shape_index];
    } else {
      Rng rng(derive_seed(seed, 0));
      A = astar_shape(tp);
      for (int i = 0; i < 64; ++i) walk_step(A, rng);
    }
    *out = dup_string(render_svg(A));
    return 0;
  });
}

} // extern "C"
