#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hfw {

// Deterministic seed derivation: worker/run k draws from a generator seeded
// with splitmix64 applied to root_seed + k (the standard splitmix64 output
// function), so streams are reproducible for any worker count.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t root, uint64_t stream) {
  return splitmix64(root + 0x632be59bd9b4e019ull * (stream + 1));
}

using Rng = std::mt19937_64;

// Unbiased uniform draw from {0,...,n-1} by rejection; avoids the
// implementation-defined std::uniform_int_distribution.
inline uint64_t rand_below(Rng &rng, uint64_t n) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline double rand_unit(Rng &rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

template <class T> void fisher_yates(std::vector<T> &v, Rng &rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rand_below(rng, i)]);
}

} // namespace hfw
