#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfwalk/torus.hpp"

namespace hfw {

struct SuiteResult {
  std::string suite;
  int64_t checked = 0;        // identities evaluated
  int64_t failed = 0;         // identities violated
  bool skipped = false;       // suite not applicable at this size
  std::string note;           // skip reason / mode description
  std::vector<std::string> failures; // human-readable loci (capped)
};

// Named identity suites over N_{t,n}.  Exhaustive over the full shape graph
// when the enumeration fits exact_cap shapes; otherwise the identities are
// spot-checked on shapes and neighbour pairs sampled along the shape walk
// (suites needing the full neighbour lists are skipped with a note).
// suite is one of lemma8 | lemma9 | lemma20 | lemma21 | corrector |
// bijection | counts | all.
std::vector<SuiteResult> run_verify(const TorusParams &tp,
                                    const std::string &suite, uint64_t seed,
                                    int64_t samples = 200,
                                    int64_t exact_cap = 1500);

} // namespace hfw
