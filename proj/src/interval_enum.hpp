#pragma once

// Internal helpers shared by the enumeration surface and the ranking loops.

#include <cstdint>
#include <vector>

#include "dfnrank/orders.hpp"

namespace dfnrank::detail {

/// All intervals [a,b] with a <= inner.lo and b >= inner.hi, unsorted.
void collect_supersets(int n, const Interval& inner,
                       std::vector<Interval>& out);

/// Sorts ascending under `ord`; bumps *comparisons per comparator call when
/// given. Rejects custom comparators that leave distinct intervals tied.
void sort_intervals(const IntervalOrder& ord, std::vector<Interval>& ivs,
                    std::uint64_t* comparisons);

}  // namespace dfnrank::detail
