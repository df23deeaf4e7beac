#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dfnrank/error.hpp"

namespace dfnrank {

/// Problem instance: the chain L_n = {0,...,n} and a membership scale with
/// m levels. Membership values are handled as level indices 1..m throughout;
/// an explicit numeric scale is carried for display only and never affects
/// ordering, counting or ranking.
struct ChainParams {
  int n = 0;
  int m = 2;
  std::vector<double> values;  // empty = uniform scale (j-1)/(m-1)

  ChainParams(int n_, int m_, std::vector<double> values_ = {});

  bool same_chain(const ChainParams& other) const {
    return n == other.n && m == other.m;
  }
};

/// Evenly spaced display scale 0, 1/(m-1), ..., 1.
std::vector<double> uniform_scale(int m);

/// Closed subinterval [lo, hi] of a chain. Plain value type; whether the
/// endpoints fit a particular L_n is checked by the operations that need it.
struct Interval {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;

  bool contains(const Interval& inner) const {
    return lo <= inner.lo && hi >= inner.hi;
  }
  bool in_chain(int n) const { return 0 <= lo && lo <= hi && hi <= n; }
};

std::string to_text(const Interval& iv);  // "[lo,hi]"

/// Discrete fuzzy number over (n, m): levels[x] is the index j with
/// A(x) = y_j, for each chain point x in 0..n. Instances are produced by
/// validate_dfn / from_alpha_cuts and satisfy normality and unimodality.
struct Dfn {
  ChainParams params;
  std::vector<int> levels;

  Interval core() const;     // plateau where the level equals m
  Interval support() const;  // points with level >= 2

  /// Equality of the fuzzy numbers themselves; display scales are ignored.
  friend bool operator==(const Dfn& a, const Dfn& b) {
    return a.params.same_chain(b.params) && a.levels == b.levels;
  }
};

/// The m nested alpha-cuts of a dfn, cut(1) being the whole chain [0, n].
struct AlphaCutChain {
  ChainParams params;
  std::vector<Interval> cuts;  // cuts[j-1] = cut at level j

  const Interval& cut(int level) const { return cuts[level - 1]; }
  Interval& cut(int level) { return cuts[level - 1]; }

  friend bool operator==(const AlphaCutChain& a, const AlphaCutChain& b) {
    return a.params.same_chain(b.params) && a.cuts == b.cuts;
  }
};

/// Checks length, level range, normality and unimodality; throws Error with
/// the matching Errc on the first violation found.
Dfn validate_dfn(const ChainParams& params, std::vector<int> levels);

AlphaCutChain to_alpha_cuts(const Dfn& a);

/// Rebuilds the membership array from a nested cut chain. Requires the
/// level-1 cut to be the whole chain; inverse of to_alpha_cuts.
Dfn from_alpha_cuts(const AlphaCutChain& chain);

/// Ascending level indices attained on the support (levels >= 2);
/// always contains m.
std::vector<int> relevant_levels(const Dfn& a);

/// Canonical text form: comma-separated level indices, e.g. "6,6,6,2,1,1".
std::string to_text(const Dfn& a);
std::vector<int> parse_levels(std::string_view text);

/// Annotated form "{1/0, 1/1, 0.4/2, ...}" using the attached scale, or the
/// uniform one when none is set.
std::string to_membership_text(const Dfn& a);

}  // namespace dfnrank
