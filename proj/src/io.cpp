#include "hfwalk/io.hpp"

#include <cstdio>

namespace hfw {

namespace {

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

} // namespace

std::string build_id() { return "hfwalk-1.0.0"; }

Json envelope(const std::string &kind, const TorusParams *tp,
              const uint64_t *seed) {
  Json j;
  j["kind"] = kind;
  j["build"] = build_id();
  if (tp) j["params"] = params_json(*tp);
  if (seed) j["seed"] = *seed;
  return j;
}

Json params_json(const TorusParams &tp) {
  return Json{{"p", {tp.p[0], tp.p[1]}},
              {"n", {tp.n[0], tp.n[1]}},
              {"t", {tp.t[0], tp.t[1]}},
              {"d", {tp.d[0], tp.d[1]}},
              {"g", tp.g},
              {"V", tp.V()},
              {"strip_period", to_string(tp.strip_period())}};
}

Json rat_json(const Rat &r) {
  return Json{{"value", to_double(r)}, {"exact", to_string(r)}};
}

Json shape_json(const Shape &A) {
  return Json{{"p", {A.tp.p[0], A.tp.p[1]}},
              {"n", {A.tp.n[0], A.tp.n[1]}},
              {"edges", A.edge_list()},
              {"offset", to_string(shape_offset(A))}};
}

Json loop_json(const Loop &l) {
  return Json{{"start", {l.sx, l.sy}}, {"moves", l.moves}};
}

Json report_json(const DiffusivityReport &rep) {
  Json j;
  j["shape_count"] = rep.shape_count;
  j["edge_count"] = rep.edge_count;
  j["exact"] = rep.exact;
  j["sigma2_Y"] = rep.sigma2_Y;
  j["p_same_shape"] = rep.p_same_shape;
  j["sigma2_Xhat"] = rep.sigma2_Xhat;
  j["limit_value"] = rep.limit_value;
  j["gap"] = rep.gap;
  if (rep.exact) {
    j["sigma2_Y_exact"] = to_string(rep.sigma2_Y_q);
    j["sigma2_Xhat_exact"] = to_string(rep.sigma2_Xhat_q);
    j["gap_exact"] = to_string(rep.gap_q);
  } else {
    j["residual"] = rep.residual;
    j["iterations"] = rep.iterations;
  }
  return j;
}

Json estimate_json(const DiffusivityEstimate &est) {
  return Json{{"sigma2", est.sigma2},   {"se", est.se},
              {"steps", est.steps},     {"burn_in", est.burn_in},
              {"window", est.window},   {"runs", est.runs},
              {"batches", est.batches}};
}

Json strip_stats_json(const StripStatistics &st) {
  return Json{{"samples", st.samples},
              {"eps", st.eps},
              {"r_fraction", st.r_fraction},
              {"ks_h", st.ks_h},
              {"disjoint_fraction", st.disjoint_fraction}};
}

Json simplex_json(const SimplexIntegralEstimate &est) {
  return Json{{"full", est.full},
              {"full_se", est.full_se},
              {"conditional", est.conditional},
              {"conditional_se", est.cond_se},
              {"order_prob", est.order_prob},
              {"order_se", est.order_se}};
}

Json counting_json(const CountingConstantEstimate &est) {
  return Json{{"value", est.value},
              {"se", est.se},
              {"conditioned", est.conditioned}};
}

Json suites_json(const std::vector<SuiteResult> &rs) {
  Json arr = Json::array();
  for (const SuiteResult &r : rs) {
    arr.push_back(Json{{"suite", r.suite},
                       {"checked", r.checked},
                       {"failed", r.failed},
                       {"skipped", r.skipped},
                       {"note", r.note},
                       {"failures", r.failures}});
  }
  return arr;
}

std::string sweep_csv_header() { return "p1,p2,n1,n2,S,M,sigma2,gap\n"; }

std::string sweep_csv_row(const DiffusivityReport &rep) {
  std::string out;
  out += std::to_string(rep.tp.p[0]) + "," + std::to_string(rep.tp.p[1]);
  out += "," + std::to_string(rep.tp.n[0]) + "," + std::to_string(rep.tp.n[1]);
  out += "," + std::to_string(rep.shape_count);
  out += "," + std::to_string(rep.edge_count);
  out += "," + fmt("%.12g", rep.sigma2_Xhat);
  out += "," + fmt("%.12g", rep.gap) + "\n";
  return out;
}

std::string render_svg(const Shape &A) {
  const TorusParams &tp = A.tp;
  const double s = 40.0, m = 20.0;
  const int t1 = tp.t[0], t2 = tp.t[1];
  auto px = [&](double x) { return fmt("%.1f", m + x * s); };
  auto py = [&](double y) { return fmt("%.1f", m + (t2 - y) * s); };
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt("%.1f", t1 * s + 2 * m) + "\" height=\"" +
         fmt("%.1f", t2 * s + 2 * m) + "\" version=\"1.1\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // lattice grid
  for (int x = 0; x <= t1; ++x)
    svg += "<line x1=\"" + px(x) + "\" y1=\"" + py(0) + "\" x2=\"" + px(x) +
           "\" y2=\"" + py(t2) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  for (int y = 0; y <= t2; ++y)
    svg += "<line x1=\"" + px(0) + "\" y1=\"" + py(y) + "\" x2=\"" + px(t1) +
           "\" y2=\"" + py(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  // down-step edges
  for (int e : A.edge_list()) {
    int v = tp.ebase(e), x = tp.vx(v), y = tp.vy(v);
    double x2 = x + (tp.eaxis(e) == 0 ? 1 : 0);
    double y2 = y + (tp.eaxis(e) == 0 ? 0 : 1);
    svg += "<line x1=\"" + px(x) + "\" y1=\"" + py(y) + "\" x2=\"" + px(x2) +
           "\" y2=\"" + py(y2) +
           "\" stroke=\"#cc2222\" stroke-width=\"4\" "
           "stroke-linecap=\"round\"/>\n";
  }
  // fracture loops on the half-integer grid; wrapping moves are split into
  // two stubs that run half a cell past the boundary (covered by the margin)
  static const char *palette[] = {"#2255cc", "#22aa55", "#aa22aa", "#d4870c"};
  int ci = 0;
  for (const Loop &l : to_loops(A)) {
    const char *col = palette[ci++ % 4];
    auto pts = l.points();
    for (size_t i = 0; i < pts.size(); ++i) {
      auto [ax, ay] = pts[i];
      auto [bx, by] = pts[(i + 1) % pts.size()];
      char mv = l.moves[i];
      // unwrapped target of this move from (ax, ay)
      double ux = ax + (mv == 'L' ? -2 : 0), uy = ay + (mv == 'U' ? 2 : 0);
      auto seg = [&](double x1, double y1, double x2, double y2) {
        svg += "<line x1=\"" + px(x1 / 2) + "\" y1=\"" + py(y1 / 2) +
               "\" x2=\"" + px(x2 / 2) + "\" y2=\"" + py(y2 / 2) +
               "\" stroke=\"" + col +
               "\" stroke-width=\"2.5\" stroke-linecap=\"round\"/>\n";
      };
      if (ux == bx && uy == by) {
        seg(ax, ay, bx, by);
      } else {
        seg(ax, ay, ux, uy);
        double wx = bx - (mv == 'L' ? -2 : 0), wy = by - (mv == 'U' ? 2 : 0);
        seg(wx, wy, bx, by);
      }
    }
  }
  svg += "<text x=\"" + fmt("%.1f", m) + "\" y=\"" + fmt("%.1f", m - 6) +
         "\" font-family=\"monospace\" font-size=\"12\">p=(" +
         std::to_string(tp.p[0]) + "," + std::to_string(tp.p[1]) + ") n=(" +
         std::to_string(tp.n[0]) + "," + std::to_string(tp.n[1]) +
         ")</text>\n";
  svg += "</svg>\n";
  return svg;
}

} // namespace hfw
