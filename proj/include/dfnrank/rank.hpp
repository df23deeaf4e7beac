#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dfnrank/core.hpp"
#include "dfnrank/counting.hpp"
#include "dfnrank/orders.hpp"

namespace dfnrank {

/// Instrumentation for the complexity guard: counts the work a single
/// rank/unrank call performs, independent of wall clock.
struct RankMetrics {
  std::uint64_t interval_comparisons = 0;  // comparator invocations
  std::uint64_t sdfn_evaluations = 0;      // extension counts computed
  std::uint64_t candidates_scanned = 0;    // candidate intervals visited

  std::uint64_t total() const {
    return interval_comparisons + sdfn_evaluations + candidates_scanned;
  }
};

/// Position of `a` in the dfn lattice under `ord`, counting from 0: the
/// number of dfns strictly below `a`. Runs level by level over the cut
/// chain, summing extension counts of candidate cuts that precede a's cut,
/// in O(n^2 m log n) time and O(n^2) working memory. Never enumerates the
/// lattice.
///
/// Indices are 0-based at this interface (0 = minimum, N-1 = maximum);
/// the per-level accumulator visible in traces is 1-based.
BigCount pos(const IntervalOrder& ord, const Dfn& a,
             RankMetrics* metrics = nullptr);

/// Inverse of pos: the unique dfn at position `index` (0-based) under
/// `ord`. Throws Errc::index_out_of_range unless 0 <= index < total_dfns.
Dfn pos_inv(const IntervalOrder& ord, const ChainParams& params,
            const BigCount& index, RankMetrics* metrics = nullptr);

struct TraceRow {
  Interval interval;
  BigCount count;        // extension count of this candidate at this level
  BigCount accumulated;  // running sum including this row
};

/// One level of a rank/unrank run. For ranking, rows list every candidate
/// up to and including the chosen cut; for unranking, the candidates
/// actually scanned before the choice was made.
struct LevelStep {
  int level = 0;                  // j, from m down to 1
  std::size_t candidate_count = 0;  // s_j: rows for rank, full list for unrank
  std::size_t chosen_index = 0;   // k_j, 1-based among sorted candidates
  Interval chosen;                // the cut fixed at this level
  std::vector<TraceRow> rows;
  BigCount counter_after;  // rank: 1-based accumulator; unrank: residual
};

struct RankTrace {
  std::vector<LevelStep> steps;  // ordered level m, m-1, ..., 1
  BigCount position;             // 0-based result
};

struct UnrankTrace {
  std::vector<LevelStep> steps;
  Dfn result;
};

RankTrace pos_trace(const IntervalOrder& ord, const Dfn& a);
UnrankTrace pos_trace(const IntervalOrder& ord, const ChainParams& params,
                      const BigCount& index);

}  // namespace dfnrank
