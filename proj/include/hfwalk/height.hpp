#pragma once

#include <vector>

#include "hfwalk/torus.hpp"

namespace hfw {

// A pn-periodic height function: rational heights on the torus vertices with
// step -q_i+1 (up) or -q_i-1 (down) along axis i.
struct HeightFunction {
  TorusParams tp;
  std::vector<Rat> v; // indexed by vertex id

  HeightFunction() = default;
  HeightFunction(const TorusParams &tp_, std::vector<Rat> vals)
      : tp(tp_), v(std::move(vals)) {}

  const Rat &at(int x, int y) const { return v[tp.vid(x, y)]; }
  Rat &at(int x, int y) { return v[tp.vid(x, y)]; }

  Rat step(int e) const {
    int axis = tp.eaxis(e), b = tp.ebase(e);
    return v[tp.vshift(b, axis)] - v[b];
  }
};

// True iff every step is -q_i+1 or -q_i-1.
bool is_height_function(const HeightFunction &f);

// Sign of an edge: +1 for an up step, -1 for a down step.
int sgn(const HeightFunction &f, int e);

// The line L_{(x,i)}: all t_i edges obtained by shifting e along its axis.
std::vector<int> line(const TorusParams &tp, int e);

// Exact average height.
Rat average_height(const HeightFunction &f);

// chi(f) = sum_x (f(x) - f(0)); the Lyapunov functional of the
// irreducibility descent.
Rat chi(const HeightFunction &f);

} // namespace hfw
