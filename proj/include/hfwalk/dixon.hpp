#pragma once

#include <cstdint>
#include <vector>

#include "hfwalk/rational.hpp"

namespace hfw {

// Sparse square integer matrix in CSR form.
struct SparseIntMatrix {
  int n = 0;
  std::vector<uint32_t> off; // size n+1
  std::vector<uint32_t> col;
  std::vector<int64_t> val;
};

// Exact solution of A x = b for nonsingular integer A by p-adic lifting with
// a single word-sized prime and rational reconstruction.  Throws SolverError
// if A is singular (or singular modulo the internal prime).
std::vector<Rat> dixon_solve(const SparseIntMatrix &A,
                             const std::vector<BigInt> &b);

} // namespace hfw
