#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dfnrank/error.hpp"

namespace dfnrank {

/// Exact nonnegative counts and lattice positions. These exceed 64 bits at
/// modest m, so everything on the counting/ranking path is arbitrary
/// precision; no floating point is involved anywhere.
using BigCount = mpz_class;

/// Binomial coefficient with an extended domain:
///   C(a, b) = 0            for b < -1 or b > a,
///   C(-1, -1) = 1, C(a, -1) = 0 for a >= 0,
///   the usual value        for 0 <= b <= a.
/// The b = -1 convention makes the level-1 extension count an indicator that
/// selects exactly the whole-chain cut.
BigCount binomial(long a, long b);

/// Number of dfns over (n, m): C(n + 2m - 2, 2m - 2).
BigCount total_dfns(int n, int m);

/// Number of closed intervals of L_n: (n+1)(n+2)/2.
BigCount interval_count(int n);

/// Number of extensions below level `level` whose cut at that level is
/// exactly [lo, hi]: C(lo + level - 2, level - 2) * C(n - hi + level - 2,
/// level - 2). For level 1 this degenerates to the whole-chain indicator.
BigCount sdfn_count(int lo, int hi, int level, int n);

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

/// Parses a (possibly signed) decimal string; throws Errc::invalid_argument
/// on anything else.
BigCount parse_decimal(std::string_view text);

}  // namespace dfnrank
