#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hfw {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat &r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rat &r) { return r.str(); }

// Floor of a rational, as a BigInt.
inline BigInt rat_floor(const Rat &r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

// r reduced into [0, m) for a positive modulus m.
inline Rat rat_mod(const Rat &r, const Rat &m) {
  Rat q = r / m;
  return r - Rat(rat_floor(q)) * m;
}

} // namespace hfw
