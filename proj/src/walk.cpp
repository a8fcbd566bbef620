#include "hfwalk/walk.hpp"

#include <algorithm>

#include "hfwalk/torus.hpp"

namespace hfw {

namespace {

inline RowMask bit(int x) { return (RowMask)1 << x; }

inline int popcount128(RowMask m) {
  return __builtin_popcountll((uint64_t)m) +
         __builtin_popcountll((uint64_t)(m >> 64));
}

// cyclic shift: bit x of result = bit (x+1 mod t1) of m
inline RowMask rot_down(RowMask m, int t1) {
  return (m >> 1) | ((m & 1) << (t1 - 1));
}

// All row patterns whose rises sit on down steps and drops on up steps:
// the two constants, plus one pattern per alternating choice of a nonempty
// rise subset of the down positions and one drop in each cyclic gap.
std::vector<RowMask> row_patterns(int t1, RowMask down) {
  std::vector<RowMask> out = {0, (t1 == 128 ? ~(RowMask)0 : bit(t1) - 1)};
  std::vector<int> downs, ups;
  for (int x = 0; x < t1; ++x) (down & bit(x) ? downs : ups).push_back(x);
  int nd = (int)downs.size();
  std::vector<int> rises, drops;
  // drops[i] lies cyclically strictly between rises[i] and rises[i+1]
  auto emit = [&](auto &&self, size_t gap) -> void {
    if (gap == rises.size()) {
      RowMask r = 0;
      for (size_t i = 0; i < rises.size(); ++i) {
        // ones on the cyclic vertex range [rises[i]+1, drops[i]]
        int a = (rises[i] + 1) % t1, b = drops[i];
        for (int x = a;; x = (x + 1) % t1) {
          r |= bit(x);
          if (x == b) break;
        }
      }
      out.push_back(r);
      return;
    }
    int lo = rises[gap], hi = rises[(gap + 1) % rises.size()];
    for (int u : ups) {
      int rel = ((u - lo) % t1 + t1) % t1;
      int span = ((hi - lo) % t1 + t1) % t1;
      if (span == 0) span = t1; // single rise: whole circle
      if (rel > 0 && rel < span) {
        drops.push_back(u);
        self(self, gap + 1);
        drops.pop_back();
      }
    }
  };
  for (int mask = 1; mask < (1 << nd); ++mask) {
    rises.clear();
    for (int i = 0; i < nd; ++i)
      if (mask >> i & 1) rises.push_back(downs[i]);
    emit(emit, 0);
  }
  return out;
}

} // namespace

bool DeltaSampler::allowed(RowMask lo, RowMask hi, RowMask down) const {
  RowMask rise = ~lo & hi, drop = lo & ~hi;
  RowMask full = t1_ == 128 ? ~(RowMask)0 : bit(t1_) - 1;
  return ((rise & full & ~down) | (drop & down)) == 0;
}

DeltaSampler::DeltaSampler(const Shape &A)
    : A_(A), t1_(A.tp.t[0]), t2_(A.tp.t[1]) {
  const TorusParams &tp = A.tp;
  if (t1_ > 128) throw BudgetError("torus width exceeds the sampler limit");
  downH_.assign(t2_, 0);
  downV_.assign(t2_, 0);
  pats_.resize(t2_);
  for (int y = 0; y < t2_; ++y) {
    for (int x = 0; x < t1_; ++x) {
      if (A.test(tp.eid(x, y, 0))) downH_[y] |= bit(x);
      if (A.test(tp.eid(x, y, 1))) downV_[y] |= bit(x);
    }
    pats_[y] = row_patterns(t1_, downH_[y]);
  }
  // suffix products against the closing row-0 pattern, normalized per level
  size_t m0 = pats_[0].size();
  suffix_.resize(t2_ + 1);
  suffix_[t2_].assign(m0 * m0, 0.0);
  for (size_t i = 0; i < m0; ++i) suffix_[t2_][i * m0 + i] = 1.0;
  for (int k = t2_ - 1; k >= 0; --k) {
    size_t mk = pats_[k].size();
    size_t mn = pats_[(k + 1) % t2_].size();
    if (k + 1 == t2_) mn = m0;
    suffix_[k].assign(mk * m0, 0.0);
    double mx = 0;
    for (size_t i = 0; i < mk; ++i) {
      for (size_t j = 0; j < mn; ++j) {
        if (!allowed(pats_[k][i], pats_[(k + 1) % t2_][j], downV_[k])) continue;
        const double *src = &suffix_[k + 1][j * m0];
        double *dst = &suffix_[k][i * m0];
        for (size_t c = 0; c < m0; ++c) dst[c] += src[c];
      }
      for (size_t c = 0; c < m0; ++c) mx = std::max(mx, suffix_[k][i * m0 + c]);
    }
    if (mx > 0)
      for (double &v : suffix_[k]) v /= mx;
  }
}

BigInt DeltaSampler::labeling_count() const {
  size_t m0 = pats_[0].size();
  // exact integer version of the same cyclic product
  std::vector<BigInt> cur(m0 * m0, 0);
  for (size_t i = 0; i < m0; ++i) cur[i * m0 + i] = 1;
  for (int k = t2_ - 1; k >= 0; --k) {
    size_t mk = pats_[k].size();
    size_t mn = k + 1 == t2_ ? m0 : pats_[k + 1].size();
    std::vector<BigInt> nxt(mk * m0, 0);
    for (size_t i = 0; i < mk; ++i)
      for (size_t j = 0; j < mn; ++j) {
        if (!allowed(pats_[k][i], pats_[(k + 1) % t2_][j], downV_[k])) continue;
        for (size_t c = 0; c < m0; ++c) nxt[i * m0 + c] += cur[j * m0 + c];
      }
    cur = std::move(nxt);
  }
  BigInt tr = 0;
  for (size_t i = 0; i < m0; ++i) tr += cur[i * m0 + i];
  return tr;
}

std::vector<RowMask> DeltaSampler::sample(Rng &rng) const {
  size_t m0 = pats_[0].size();
  std::vector<size_t> idx(t2_);
  std::vector<double> w(m0);
  double tot = 0;
  for (size_t i = 0; i < m0; ++i) {
    w[i] = suffix_[0][i * m0 + i];
    tot += w[i];
  }
  double u = rand_unit(rng) * tot;
  size_t i0 = m0 - 1;
  for (size_t i = 0; i < m0; ++i) {
    if (u < w[i]) {
      i0 = i;
      break;
    }
    u -= w[i];
  }
  idx[0] = i0;
  for (int k = 1; k < t2_; ++k) {
    size_t mk = pats_[k].size();
    w.assign(mk, 0.0);
    tot = 0;
    for (size_t j = 0; j < mk; ++j) {
      if (!allowed(pats_[k - 1][idx[k - 1]], pats_[k][j], downV_[k - 1]))
        continue;
      w[j] = suffix_[k][j * m0 + i0];
      tot += w[j];
    }
    double v = rand_unit(rng) * tot;
    size_t pick = mk - 1;
    for (size_t j = 0; j < mk; ++j) {
      if (w[j] == 0) continue;
      if (v < w[j]) {
        pick = j;
        break;
      }
      v -= w[j];
    }
    idx[k] = pick;
  }
  std::vector<RowMask> rows(t2_);
  for (int k = 0; k < t2_; ++k) rows[k] = pats_[k][idx[k]];
  return rows;
}

std::vector<std::vector<RowMask>> DeltaSampler::enumerate_all() const {
  // The suffix weights are sums of positive per-level-normalized products,
  // so an entry is zero iff no completion exists; pruning on them keeps the
  // search tree at exactly deg + 2 leaves.
  std::vector<std::vector<RowMask>> out;
  size_t m0 = pats_[0].size();
  std::vector<size_t> idx(t2_);
  auto rec = [&](auto &&self, int k, size_t i0) -> void {
    if (k == t2_) {
      std::vector<RowMask> rows(t2_);
      for (int y = 0; y < t2_; ++y) rows[y] = pats_[y][idx[y]];
      out.push_back(std::move(rows));
      return;
    }
    for (size_t j = 0; j < pats_[k].size(); ++j) {
      if (!allowed(pats_[k - 1][idx[k - 1]], pats_[k][j], downV_[k - 1]))
        continue;
      if (suffix_[k][j * m0 + i0] == 0) continue;
      idx[k] = j;
      self(self, k + 1, i0);
    }
  };
  for (size_t i = 0; i < m0; ++i) {
    if (suffix_[0][i * m0 + i] == 0) continue;
    idx[0] = i;
    if (t2_ == 1) {
      out.push_back({pats_[0][i]});
    } else {
      rec(rec, 1, i);
    }
  }
  return out;
}

double apply_labeling(Shape &A, const std::vector<RowMask> &rows) {
  const TorusParams tp = A.tp;
  int t1 = tp.t[0], t2 = tp.t[1];
  int64_t plus = 0;
  for (int y = 0; y < t2; ++y) {
    plus += popcount128(rows[y]);
    RowMask hflip = rows[y] ^ rot_down(rows[y], t1);
    RowMask vflip = rows[y] ^ rows[(y + 1) % t2];
    for (int x = 0; x < t1; ++x) {
      if (hflip & bit(x)) {
        int e = tp.eid(x, y, 0);
        A.test(e) ? A.reset(e) : A.set(e);
      }
      if (vflip & bit(x)) {
        int e = tp.eid(x, y, 1);
        A.test(e) ? A.reset(e) : A.set(e);
      }
    }
  }
  return (2.0 * plus - tp.V()) / tp.V();
}

double walk_step(Shape &A, Rng &rng) {
  DeltaSampler s(A);
  return apply_labeling(A, s.sample(rng));
}

} // namespace hfw
