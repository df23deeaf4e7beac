#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfnrank/core.hpp"
#include "dfnrank/counting.hpp"
#include "dfnrank/orders.hpp"

namespace dfnrank {

/// Deliberately naive reference path: enumerate, sort, look up. Exists to
/// validate pos/pos_inv on small instances and shares no logic with them.

inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// Every dfn over (n, m), generated as nested cut chains in lexicographic
/// chain order (independent of any interval order). Size equals
/// total_dfns(n, m); throws Errc::instance_too_large beyond `cap`.
std::vector<Dfn> enumerate_all(const ChainParams& params,
                               std::uint64_t cap = kEnumerationCap);

/// All dfns sorted ascending under compare_dfn.
std::vector<Dfn> oracle_sorted(const IntervalOrder& ord,
                               const ChainParams& params,
                               std::uint64_t cap = kEnumerationCap);

/// Position by literal counting: index of `a` in oracle_sorted.
BigCount oracle_pos(const IntervalOrder& ord, const Dfn& a,
                    std::uint64_t cap = kEnumerationCap);

struct CrossCheckMismatch {
  std::string kind;  // "rank" or "unrank"
  BigCount index;
  std::string expected;
  std::string actual;
};

struct CrossCheckReport {
  int n = 0;
  int m = 0;
  std::string order;
  std::uint64_t checked = 0;
  std::vector<CrossCheckMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string summary() const;
};

/// For every dfn A of the instance: pos(A) must equal its oracle index, and
/// pos_inv of that index must reproduce A. Any disagreement is recorded,
/// never suppressed.
CrossCheckReport cross_check(const IntervalOrder& ord,
                             const ChainParams& params,
                             std::uint64_t cap = kEnumerationCap);

}  // namespace dfnrank
