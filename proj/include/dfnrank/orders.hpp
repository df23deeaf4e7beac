#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfnrank/core.hpp"

namespace dfnrank {

enum class OrderKind { lex1, lex2, xu_yager, t_inc, custom };

/// A total order on the closed intervals of a chain. The four built-ins:
///
///   lex1:     [a,b] <= [c,d]  iff  a < c, or a = c and b <= d
///   lex2:     [a,b] <= [c,d]  iff  b < d, or b = d and a <= c
///   xu-yager: [a,b] <= [c,d]  iff  a+b < c+d, or a+b = c+d and b-a <= d-c
///   t-inc:    [a,b] <= [c,d]  iff  a < c, or a = c and d <= b
///
/// Custom comparators are accepted under the documented precondition that
/// they are total orders; use find_order_violation to verify one for small n
/// instead of trusting the contract.
class IntervalOrder {
 public:
  using Comparator =
      std::function<std::strong_ordering(const Interval&, const Interval&)>;

  static IntervalOrder lex1();
  static IntervalOrder lex2();
  static IntervalOrder xu_yager();
  static IntervalOrder t_inc();
  static IntervalOrder custom(std::string name, Comparator cmp);

  /// Accepts the exact configuration names "lex1", "lex2", "xu-yager",
  /// "t-inc".
  static std::optional<IntervalOrder> from_name(std::string_view name);

  OrderKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  std::strong_ordering compare(const Interval& a, const Interval& b) const;

 private:
  IntervalOrder(OrderKind kind, std::string name, Comparator cmp)
      : kind_(kind), name_(std::move(name)), custom_(std::move(cmp)) {}

  OrderKind kind_;
  std::string name_;
  Comparator custom_;  // only set for OrderKind::custom
};

/// All (n+1)(n+2)/2 intervals of L_n, strictly ascending under `ord`.
/// Throws Errc::inconsistent_order if a custom comparator produces ties on
/// distinct intervals.
std::vector<Interval> sorted_intervals(const IntervalOrder& ord, int n);

/// The (inner.lo + 1) * (n - inner.hi + 1) intervals containing `inner`,
/// ascending under `ord`.
std::vector<Interval> containing_intervals(const IntervalOrder& ord, int n,
                                           const Interval& inner);

struct AdmissibilityResult {
  bool admissible = false;
  /// A pair (I, J) with I <=2 J componentwise but J strictly before I.
  std::optional<std::pair<Interval, Interval>> witness;
};

/// Exhaustive check that `ord` refines the componentwise partial order on
/// the intervals of L_n.
AdmissibilityResult is_admissible(const IntervalOrder& ord, int n);

/// Exhaustive order-axiom check (reflexivity, antisymmetry, totality,
/// transitivity) over the intervals of L_n. Returns a description of the
/// first violation, or nullopt if `ord` is a total order there.
std::optional<std::string> find_order_violation(const IntervalOrder& ord,
                                                int n);

/// Total order on dfns induced by `ord`: cut chains are compared from the
/// top level downward and the highest differing level decides. Equal iff
/// every cut (equivalently, the level arrays) coincide.
std::strong_ordering compare_dfn(const IntervalOrder& ord, const Dfn& a,
                                 const Dfn& b);

std::strong_ordering compare_cut_chains(const IntervalOrder& ord,
                                        const AlphaCutChain& a,
                                        const AlphaCutChain& b);

}  // namespace dfnrank
