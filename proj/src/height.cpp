#include "hfwalk/height.hpp"

namespace hfw {

bool is_height_function(const HeightFunction &f) {
  if ((int)f.v.size() != f.tp.V()) return false;
  if (denominator(f.v[0]) != 1) return false;
  for (int e = 0; e < f.tp.E(); ++e) {
    Rat s = f.step(e) + f.tp.q(f.tp.eaxis(e));
    if (s != 1 && s != -1) return false;
  }
  return true;
}

int sgn(const HeightFunction &f, int e) {
  Rat s = f.step(e) + f.tp.q(f.tp.eaxis(e));
  return s > 0 ? 1 : -1;
}

std::vector<int> line(const TorusParams &tp, int e) {
  int axis = tp.eaxis(e);
  std::vector<int> out;
  out.reserve(tp.t[axis]);
  int base = axis * tp.V() + tp.vid(axis == 0 ? 0 : tp.vx(tp.ebase(e)),
                                    axis == 0 ? tp.vy(tp.ebase(e)) : 0);
  for (int k = 0; k < tp.t[axis]; ++k) {
    out.push_back(base);
    base = tp.eshift(base);
  }
  return out;
}

Rat average_height(const HeightFunction &f) {
  Rat s = 0;
  for (const Rat &x : f.v) s += x;
  return s / f.tp.V();
}

Rat chi(const HeightFunction &f) {
  Rat s = 0;
  for (const Rat &x : f.v) s += x - f.v[0];
  return s;
}

} // namespace hfw
