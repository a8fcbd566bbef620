// Command-line front end; links only the C interface of the library.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfwalk/hfwalk.h"

namespace {

struct Common {
  std::vector<int> p = {2, 2}, n = {1, 1};
  uint64_t seed = 0;
  std::string out, format = "json";
  int64_t cap = 2000000;
};

void add_common(CLI::App *cmd, Common &c, bool with_format = false) {
  cmd->add_option("--p", c.p, "torus p as a,b")->delimiter(',')->expected(2);
  cmd->add_option("--n", c.n, "torus n as a,b")->delimiter(',')->expected(2);
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_option("--cap", c.cap, "enumeration budget");
  if (with_format)
    cmd->add_option("--format", c.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

int emit(const Common &c, const char *text) {
  if (!text) return 1;
  if (c.out.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << c.out << "\n";
    return 1;
  }
  f << text;
  return f.good() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"height-function walk toolkit"};
  app.require_subcommand(1);

  if (const char *w = std::getenv("HFW_WORKERS")) {
    long n = std::strtol(w, nullptr, 10);
    if (n > 1)
      std::cerr << "HFW_WORKERS=" << n
                << " requested; running single-threaded\n";
  }

  Common c;
  std::string suite = "all", shape_sel = "random";
  int64_t steps = 1000000, burn_in = -1, window = 0, samples = 100000;
  int runs = 1, gval = 1;
  std::vector<int> plist;
  bool with_torus = false;

  CLI::App *params = app.add_subcommand("params", "derived parameters");
  add_common(params, c);
  CLI::App *enumerate = app.add_subcommand("enumerate", "list all shapes");
  add_common(enumerate, c);
  CLI::App *graph = app.add_subcommand("graph", "shape-graph summary");
  add_common(graph, c);
  CLI::App *exact = app.add_subcommand("exact-sigma", "diffusivity report");
  add_common(exact, c);
  CLI::App *sweep = app.add_subcommand("sweep", "CSV diffusivity sweep");
  add_common(sweep, c, true);
  sweep->add_option("--plist", plist, "flat list p1,p2,p1,p2,...")
      ->delimiter(',')
      ->required();
  CLI::App *sim = app.add_subcommand("simulate", "Monte Carlo diffusivity");
  add_common(sim, c);
  sim->add_option("--steps", steps, "steps per run");
  sim->add_option("--runs", runs, "independent runs");
  sim->add_option("--burn-in", burn_in, "burn-in steps (-1: automatic)");
  sim->add_option("--window", window, "batch window (0: sqrt of steps)");
  CLI::App *loops = app.add_subcommand("sample-loops", "strip statistics");
  add_common(loops, c);
  loops->add_option("--samples", samples, "loop draws");
  CLI::App *verify = app.add_subcommand("verify", "identity suites");
  add_common(verify, c);
  verify
      ->add_option("--suite", suite,
                   "lemma8|lemma9|lemma20|lemma21|corrector|bijection|"
                   "counts|all")
      ->required();
  verify->add_option("--samples", samples, "spot checks per suite");
  CLI::App *integral =
      app.add_subcommand("integral-check", "simplex integral estimates");
  add_common(integral, c);
  integral->add_option("--g", gval, "number of loops per family");
  integral->add_option("--samples", samples, "Monte Carlo samples");
  integral->add_flag("--with-torus", with_torus,
                     "also estimate the interleaving constant on --p/--n");
  CLI::App *render = app.add_subcommand("render", "SVG of a shape");
  add_common(render, c);
  render->add_option("--shape", shape_sel, "index or 'random'");

  CLI11_PARSE(app, argc, argv);

  hfw_ctx *ctx = hfw_ctx_new();
  if (!ctx) return 1;
  char *text = nullptr;
  int rc = 1;
  auto t0 = std::chrono::steady_clock::now();

  if (params->parsed()) {
    rc = hfw_params_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], &text);
  } else if (enumerate->parsed()) {
    rc = hfw_enumerate_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], c.cap,
                            &text);
  } else if (graph->parsed()) {
    rc = hfw_graph_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], c.cap, &text);
  } else if (exact->parsed()) {
    rc = hfw_exact_sigma_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], c.cap,
                              &text);
  } else if (sweep->parsed()) {
    if (plist.size() < 2 || plist.size() % 2) {
      std::cerr << "--plist needs an even number of entries\n";
      hfw_ctx_free(ctx);
      return 2;
    }
    rc = hfw_sweep_csv(ctx, plist.data(), (int)plist.size() / 2, c.n[0],
                       c.n[1], c.cap, &text);
  } else if (sim->parsed()) {
    rc = hfw_simulate_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], steps, runs,
                           burn_in, window, c.seed, &text);
  } else if (loops->parsed()) {
    rc = hfw_sample_loops_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], samples,
                               c.seed, &text);
  } else if (verify->parsed()) {
    rc = hfw_verify_json(ctx, c.p[0], c.p[1], c.n[0], c.n[1], suite.c_str(),
                         c.seed, samples, &text);
  } else if (integral->parsed()) {
    rc = hfw_integral_check_json(ctx, gval, samples, c.seed,
                                 with_torus ? c.p[0] : 0, c.p[1], c.n[0],
                                 c.n[1], &text);
  } else if (render->parsed()) {
    int64_t idx = -1;
    if (shape_sel != "random") idx = std::strtoll(shape_sel.c_str(), nullptr, 10);
    rc = hfw_render_svg(ctx, c.p[0], c.p[1], c.n[0], c.n[1], idx, c.seed,
                        c.cap, &text);
  }

  if (rc != 0 && rc != 4)
    std::cerr << "error (" << rc << "): " << hfw_last_error(ctx) << "\n";
  if (rc == 4)
    std::cerr << hfw_last_error(ctx) << "\n";
  int emit_rc = text ? emit(c, text) : 1;
  if (rc == 0 && emit_rc != 0) rc = 1;
  hfw_string_free(text);
  hfw_ctx_free(ctx);

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed " << ms << " ms\n";
  return rc;
}
