#include "dfnrank/rank.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "interval_enum.hpp"

namespace dfnrank {

namespace {

// Per-level extension counts. Both binomial factors of the closed form are
// C(x + j - 2, x), so one incrementally extended table serves the left and
// right endpoint alike; values are demanded lazily up to the largest index
// a level actually scans. Level 1 degenerates to the whole-chain indicator.
class LevelCounts {
 public:
  LevelCounts(int level, int n) : level_(level), n_(n) {
    // indices never exceed n, so the table never reallocates and the
    // references eval() holds across a second factor() call stay valid
    factors_.reserve(static_cast<std::size_t>(n) + 1);
    factors_.emplace_back(1);
  }

  BigCount eval(const Interval& iv) {
    if (level_ == 1) {
      return iv.lo == 0 && iv.hi == n_ ? 1 : 0;
    }
    return factor(iv.lo) * factor(n_ - iv.hi);
  }

 private:
  const BigCount& factor(int x) {
    while (static_cast<int>(factors_.size()) <= x) {
      const auto i = static_cast<unsigned long>(factors_.size());
      BigCount next = factors_.back();
      next *= i + static_cast<unsigned long>(level_) - 2;
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), i);
      factors_.push_back(std::move(next));
    }
    return factors_[static_cast<std::size_t>(x)];
  }

  int level_;
  int n_;
  std::vector<BigCount> factors_;  // factors_[x] = C(x + level - 2, x)
};

void build_candidates(const IntervalOrder& ord, int n,
                      const std::optional<Interval>& above,
                      std::vector<Interval>& out, RankMetrics& metrics) {
  if (above) {
    detail::collect_supersets(n, *above, out);
  } else {
    out.clear();
    for (int a = 0; a <= n; ++a) {
      for (int b = a; b <= n; ++b) out.push_back({a, b});
    }
  }
  detail::sort_intervals(ord, out, &metrics.interval_comparisons);
}

// Rank loop: walks the cut chain from the top level down, adding the
// extension counts of every candidate cut strictly before the actual one.
// The accumulator starts at 1; the public position is accumulator - 1.
template <bool kTrace>
BigCount rank_impl(const IntervalOrder& ord, const Dfn& a,
                   RankMetrics& metrics, std::vector<LevelStep>* steps) {
  const int n = a.params.n;
  const AlphaCutChain chain = to_alpha_cuts(a);
  BigCount accumulator = 1;
  std::optional<Interval> above;
  std::vector<Interval> candidates;
  for (int j = a.params.m; j >= 1; --j) {
    build_candidates(ord, n, above, candidates, metrics);
    LevelCounts counts(j, n);
    const Interval& cut = chain.cut(j);
    LevelStep step;
    BigCount below = 0;
    std::size_t position = 0;
    for (const Interval& candidate : candidates) {
      ++metrics.candidates_scanned;
      ++position;
      if (candidate == cut) break;
      ++metrics.sdfn_evaluations;
      BigCount count = counts.eval(candidate);
      below += count;
      if constexpr (kTrace) {
        step.rows.push_back({candidate, std::move(count), below});
      }
    }
    accumulator += below;
    if constexpr (kTrace) {
      BigCount own = counts.eval(cut);
      step.rows.push_back({cut, own, below + own});
      step.level = j;
      step.candidate_count = position;
      step.chosen_index = position;
      step.chosen = cut;
      step.counter_after = accumulator;
      steps->push_back(std::move(step));
    }
    above = cut;
  }
  return accumulator - 1;
}

// Unrank loop: scans each level's candidates in ascending order until the
// running sum of extension counts reaches the (1-based) residual, fixes
// that cut, and drops the mass of the candidates passed over.
template <bool kTrace>
Dfn unrank_impl(const IntervalOrder& ord, const ChainParams& params,
                const BigCount& index, RankMetrics& metrics,
                std::vector<LevelStep>* steps) {
  const BigCount total = total_dfns(params.n, params.m);
  if (index < 0 || index >= total) {
    throw Error(Errc::index_out_of_range,
                "index out of range [0," + to_decimal(total - 1) + "]");
  }
  const int n = params.n;
  BigCount residual = index + 1;
  AlphaCutChain chain{
      params, std::vector<Interval>(static_cast<std::size_t>(params.m))};
  std::optional<Interval> above;
  std::vector<Interval> candidates;
  for (int j = params.m; j >= 1; --j) {
    build_candidates(ord, n, above, candidates, metrics);
    LevelCounts counts(j, n);
    LevelStep step;
    BigCount reached = 0;
    std::size_t position = 0;
    bool chosen = false;
    for (const Interval& candidate : candidates) {
      ++metrics.candidates_scanned;
      ++position;
      ++metrics.sdfn_evaluations;
      BigCount count = counts.eval(candidate);
      reached += count;
      if constexpr (kTrace) {
        step.rows.push_back({candidate, count, reached});
      }
      if (reached >= residual) {
        residual -= reached - count;  // mass of the candidates passed over
        chain.cut(j) = candidate;
        chosen = true;
        break;
      }
    }
    if (!chosen) {
      // the total mass at each level covers every in-range residual
      throw std::logic_error("residual exceeded level mass");
    }
    if constexpr (kTrace) {
      step.level = j;
      step.candidate_count = candidates.size();
      step.chosen_index = position;
      step.chosen = chain.cut(j);
      step.counter_after = residual;
      steps->push_back(std::move(step));
    }
    above = chain.cut(j);
  }
  return from_alpha_cuts(chain);
}

}  // namespace

BigCount pos(const IntervalOrder& ord, const Dfn& a, RankMetrics* metrics) {
  try {
    validate_dfn(a.params, a.levels);
  } catch (const Error& e) {
    throw Error(Errc::invalid_dfn, std::string("invalid dfn: ") + e.what());
  }
  RankMetrics local;
  return rank_impl<false>(ord, a, metrics ? *metrics : local, nullptr);
}

Dfn pos_inv(const IntervalOrder& ord, const ChainParams& params,
            const BigCount& index, RankMetrics* metrics) {
  RankMetrics local;
  return unrank_impl<false>(ord, params, index, metrics ? *metrics : local,
                            nullptr);
}

RankTrace pos_trace(const IntervalOrder& ord, const Dfn& a) {
  try {
    validate_dfn(a.params, a.levels);
  } catch (const Error& e) {
    throw Error(Errc::invalid_dfn, std::string("invalid dfn: ") + e.what());
  }
  RankTrace trace;
  RankMetrics metrics;
  trace.position = rank_impl<true>(ord, a, metrics, &trace.steps);
  return trace;
}

UnrankTrace pos_trace(const IntervalOrder& ord, const ChainParams& params,
                      const BigCount& index) {
  RankMetrics metrics;
  std::vector<LevelStep> steps;
  Dfn result = unrank_impl<true>(ord, params, index, metrics, &steps);
  return UnrankTrace{std::move(steps), std::move(result)};
}

}  // namespace dfnrank
