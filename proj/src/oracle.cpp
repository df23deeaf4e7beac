#include "dfnrank/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dfnrank/rank.hpp"

namespace dfnrank {

namespace {

// A nested cut chain is exactly a weakly increasing sequence
// l_2 <= ... <= l_m <= r_m <= ... <= r_2 over {0..n}; walking these
// sequences in lexicographic order visits every dfn once without touching
// any interval order.
void generate_chains(const ChainParams& params,
                     const std::function<void(const AlphaCutChain&)>& sink) {
  const int n = params.n;
  const int m = params.m;
  const int len = 2 * m - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  AlphaCutChain chain{params,
                      std::vector<Interval>(static_cast<std::size_t>(m))};
  auto emit = [&] {
    chain.cut(1) = {0, n};
    for (int j = 2; j <= m; ++j) {
      chain.cut(j) = {seq[static_cast<std::size_t>(j - 2)],
                      seq[static_cast<std::size_t>(2 * m - 2 - (j - 1))]};
    }
    sink(chain);
  };
  while (true) {
    emit();
    int i = len - 1;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n) --i;
    if (i < 0) break;
    const int v = seq[static_cast<std::size_t>(i)] + 1;
    for (int t = i; t < len; ++t) seq[static_cast<std::size_t>(t)] = v;
  }
}

void require_under_cap(const ChainParams& params, std::uint64_t cap) {
  const BigCount total = total_dfns(params.n, params.m);
  if (total > cap) {
    throw Error(Errc::instance_too_large,
                "instance has " + to_decimal(total) +
                    " dfns, above the safety cap of " + std::to_string(cap));
  }
}

}  // namespace

std::vector<Dfn> enumerate_all(const ChainParams& params, std::uint64_t cap) {
  require_under_cap(params, cap);
  std::vector<Dfn> out;
  out.reserve(
      static_cast<std::size_t>(total_dfns(params.n, params.m).get_ui()));
  generate_chains(params, [&](const AlphaCutChain& chain) {
    out.push_back(from_alpha_cuts(chain));
  });
  return out;
}

std::vector<Dfn> oracle_sorted(const IntervalOrder& ord,
                               const ChainParams& params, std::uint64_t cap) {
  std::vector<Dfn> all = enumerate_all(params, cap);
  std::vector<AlphaCutChain> chains;
  chains.reserve(all.size());
  for (const Dfn& d : all) chains.push_back(to_alpha_cuts(d));
  std::vector<std::size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return compare_cut_chains(ord, chains[a], chains[b]) ==
           std::strong_ordering::less;
  });
  std::vector<Dfn> out;
  out.reserve(all.size());
  for (std::size_t i : idx) out.push_back(std::move(all[i]));
  return out;
}

BigCount oracle_pos(const IntervalOrder& ord, const Dfn& a,
                    std::uint64_t cap) {
  const std::vector<Dfn> sorted = oracle_sorted(ord, a.params, cap);
  const auto it = std::lower_bound(
      sorted.begin(), sorted.end(), a, [&](const Dfn& x, const Dfn& y) {
        return compare_dfn(ord, x, y) == std::strong_ordering::less;
      });
  if (it == sorted.end() || !(*it == a)) {
    throw Error(Errc::invalid_dfn, "dfn not found in the enumerated lattice");
  }
  return BigCount(static_cast<unsigned long>(it - sorted.begin()));
}

std::string CrossCheckReport::summary() const {
  std::string out = "order=" + order + " n=" + std::to_string(n) +
                    " m=" + std::to_string(m) +
                    " checked=" + std::to_string(checked) +
                    " mismatches=" + std::to_string(mismatches.size());
  for (const CrossCheckMismatch& mm : mismatches) {
    out += "\n  " + mm.kind + " @ index " + to_decimal(mm.index) +
           ": expected " + mm.expected + ", got " + mm.actual;
  }
  return out;
}

CrossCheckReport cross_check(const IntervalOrder& ord,
                             const ChainParams& params, std::uint64_t cap) {
  CrossCheckReport report;
  report.n = params.n;
  report.m = params.m;
  report.order = ord.name();
  const std::vector<Dfn> sorted = oracle_sorted(ord, params, cap);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const BigCount expected(static_cast<unsigned long>(i));
    const BigCount got = pos(ord, sorted[i]);
    if (got != expected) {
      report.mismatches.push_back({"rank", expected, to_decimal(expected),
                                   to_decimal(got)});
    }
    const Dfn rebuilt = pos_inv(ord, params, expected);
    if (!(rebuilt == sorted[i])) {
      report.mismatches.push_back(
          {"unrank", expected, to_text(sorted[i]), to_text(rebuilt)});
    }
  }
  report.checked = sorted.size();
  return report;
}

}  // namespace dfnrank
