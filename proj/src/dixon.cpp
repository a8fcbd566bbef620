#include "hfwalk/dixon.hpp"

#include <cmath>

#include "hfwalk/torus.hpp"

namespace hfw {

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr uint64_t P = (uint64_t(1) << 61) - 1;

inline uint64_t addm(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  return r >= P ? r - P : r;
}
inline uint64_t subm(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
inline uint64_t mulm(uint64_t a, uint64_t b) {
  unsigned __int128 z = (unsigned __int128)a * b;
  uint64_t r = (uint64_t)(z & P) + (uint64_t)(z >> 61);
  r = (r & P) + (r >> 61);
  return r >= P ? r - P : r;
}
uint64_t powm(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}
inline uint64_t invm(uint64_t a) { return powm(a, P - 2); }

inline uint64_t to_mod(int64_t v) {
  return v >= 0 ? uint64_t(v) % P : P - (uint64_t(-v) % P);
}

uint64_t big_mod(const BigInt &v) {
  BigInt r = v % P;
  if (r < 0) r += P;
  return r.convert_to<uint64_t>();
}

// Dense LU factorization mod P with row pivoting, stored in place.
struct ModLU {
  int n;
  std::vector<uint64_t> a; // n x n, row-major: unit-lower L and U combined
  std::vector<int> perm;

  explicit ModLU(const SparseIntMatrix &M) : n(M.n), a((size_t)M.n * M.n, 0), perm(M.n) {
    for (int i = 0; i < n; ++i) {
      perm[i] = i;
      for (uint32_t k = M.off[i]; k < M.off[i + 1]; ++k)
        a[(size_t)i * n + M.col[k]] = to_mod(M.val[k]);
    }
    for (int k = 0; k < n; ++k) {
      int piv = -1;
      for (int i = k; i < n; ++i)
        if (a[(size_t)i * n + k]) {
          piv = i;
          break;
        }
      if (piv < 0) throw SolverError("matrix singular modulo the lifting prime");
      if (piv != k) {
        std::swap(perm[k], perm[piv]);
        for (int j = 0; j < n; ++j)
          std::swap(a[(size_t)k * n + j], a[(size_t)piv * n + j]);
      }
      uint64_t inv = invm(a[(size_t)k * n + k]);
      for (int i = k + 1; i < n; ++i) {
        uint64_t *ri = &a[(size_t)i * n];
        uint64_t f = mulm(ri[k], inv);
        if (!f) continue;
        ri[k] = f;
        const uint64_t *rk = &a[(size_t)k * n];
        for (int j = k + 1; j < n; ++j) ri[j] = subm(ri[j], mulm(f, rk[j]));
      }
    }
  }

  std::vector<uint64_t> solve(const std::vector<uint64_t> &b) const {
    std::vector<uint64_t> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (int i = 1; i < n; ++i) {
      const uint64_t *ri = &a[(size_t)i * n];
      uint64_t s = x[i];
      for (int j = 0; j < i; ++j) s = subm(s, mulm(ri[j], x[j]));
      x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      const uint64_t *ri = &a[(size_t)i * n];
      uint64_t s = x[i];
      for (int j = i + 1; j < n; ++j) s = subm(s, mulm(ri[j], x[j]));
      x[i] = mulm(s, invm(ri[i]));
    }
    return x;
  }
};

// num/den congruent to x mod m with |num|,|den| <= sqrt(m/2), via the
// standard half-extended Euclidean algorithm.
bool rational_reconstruct(const BigInt &x, const BigInt &m, const BigInt &bound,
                          BigInt &num, BigInt &den) {
  BigInt r0 = m, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return false;
  num = r1;
  den = t1;
  return boost::multiprecision::gcd(num, den) == 1 || (num % den == 0);
}

} // namespace

std::vector<Rat> dixon_solve(const SparseIntMatrix &A,
                             const std::vector<BigInt> &b) {
  int n = A.n;
  if (n == 0) return {};
  ModLU lu(A);

  // Cramer bound from column norms: |num|, |den| <= H * max(1, |b|_2).
  double log2H = 0;
  {
    std::vector<double> colsq(n, 0);
    for (int i = 0; i < n; ++i)
      for (uint32_t k = A.off[i]; k < A.off[i + 1]; ++k)
        colsq[A.col[k]] += (double)A.val[k] * (double)A.val[k];
    for (int j = 0; j < n; ++j) log2H += 0.5 * std::log2(std::max(colsq[j], 1.0));
    double bsq = 1;
    for (const BigInt &v : b) {
      double d = v.convert_to<double>();
      bsq += d * d;
    }
    log2H += 0.5 * std::log2(bsq);
  }
  int steps = (int)(2 * log2H / 61) + 3;

  for (int attempt = 0; attempt < 4; ++attempt, steps *= 2) {
    std::vector<BigInt> r(b);
    std::vector<std::vector<uint64_t>> digits;
    std::vector<uint64_t> rb(n);
    for (int s = 0; s < steps; ++s) {
      for (int i = 0; i < n; ++i) rb[i] = big_mod(r[i]);
      digits.push_back(lu.solve(rb));
      const std::vector<uint64_t> &y = digits.back();
      for (int i = 0; i < n; ++i) {
        BigInt acc = r[i];
        for (uint32_t k = A.off[i]; k < A.off[i + 1]; ++k)
          acc -= BigInt(A.val[k]) * BigInt(y[A.col[k]]);
        r[i] = acc / BigInt(P);
      }
    }
    BigInt m = boost::multiprecision::pow(BigInt(P), steps);
    BigInt bound = boost::multiprecision::sqrt(BigInt(m / 2));
    std::vector<Rat> x(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      BigInt xi = 0;
      for (int s = steps - 1; s >= 0; --s) xi = xi * P + digits[s][i];
      BigInt num, den;
      if (!rational_reconstruct(xi, m, bound, num, den)) {
        ok = false;
        break;
      }
      x[i] = Rat(num, den);
    }
    if (!ok) continue;
    // exact verification over a common denominator
    BigInt D = 1;
    for (const Rat &xi : x) D = boost::multiprecision::lcm(D, denominator(xi));
    std::vector<BigInt> z(n);
    for (int i = 0; i < n; ++i) z[i] = numerator(x[i]) * (D / denominator(x[i]));
    for (int i = 0; i < n && ok; ++i) {
      BigInt acc = 0;
      for (uint32_t k = A.off[i]; k < A.off[i + 1]; ++k)
        acc += BigInt(A.val[k]) * z[A.col[k]];
      if (acc != b[i] * D) ok = false;
    }
    if (ok) return x;
  }
  throw SolverError("p-adic lifting failed to converge");
}

} // namespace hfw
