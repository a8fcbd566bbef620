#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hfwalk/graph.hpp"
#include "hfwalk/loop.hpp"
#include "hfwalk/montecarlo.hpp"
#include "hfwalk/verify.hpp"

namespace hfw {

using Json = nlohmann::json;

// Build identifier embedded in every artifact.
std::string build_id();

// Common artifact envelope: {kind, build, params?, seed?, body...}.  Keys are
// emitted sorted, so serialization is deterministic byte for byte.
Json envelope(const std::string &kind, const TorusParams *tp,
              const uint64_t *seed);

Json params_json(const TorusParams &tp);
Json rat_json(const Rat &r); // decimal value plus exact "num/den" string
Json shape_json(const Shape &A);
Json loop_json(const Loop &l);

Json report_json(const DiffusivityReport &rep);
Json estimate_json(const DiffusivityEstimate &est);
Json strip_stats_json(const StripStatistics &st);
Json simplex_json(const SimplexIntegralEstimate &est);
Json counting_json(const CountingConstantEstimate &est);
Json suites_json(const std::vector<SuiteResult> &rs);

// CSV sweep rows: header p1,p2,n1,n2,S,M,sigma2,gap.
std::string sweep_csv_header();
std::string sweep_csv_row(const DiffusivityReport &rep);

// SVG rendering of the fracture picture of a shape: the vertex grid, the
// down-step edges, and the fracture loops drawn from their half-integer
// points (wrapping segments are split at the torus boundary).
std::string render_svg(const Shape &A);

} // namespace hfw
