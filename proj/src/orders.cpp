#include "dfnrank/orders.hpp"

#include <algorithm>

#include "interval_enum.hpp"

namespace dfnrank {

namespace {

std::strong_ordering cmp_int(int a, int b) {
  return a < b ? std::strong_ordering::less
               : a > b ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

std::strong_ordering cmp_lex1(const Interval& x, const Interval& y) {
  if (auto c = cmp_int(x.lo, y.lo); c != 0) return c;
  return cmp_int(x.hi, y.hi);
}

std::strong_ordering cmp_lex2(const Interval& x, const Interval& y) {
  if (auto c = cmp_int(x.hi, y.hi); c != 0) return c;
  return cmp_int(x.lo, y.lo);
}

std::strong_ordering cmp_xu_yager(const Interval& x, const Interval& y) {
  if (auto c = cmp_int(x.lo + x.hi, y.lo + y.hi); c != 0) return c;
  return cmp_int(x.hi - x.lo, y.hi - y.lo);
}

// second component reversed: wider intervals with the same left end first
std::strong_ordering cmp_t_inc(const Interval& x, const Interval& y) {
  if (auto c = cmp_int(x.lo, y.lo); c != 0) return c;
  return cmp_int(y.hi, x.hi);
}

}  // namespace

IntervalOrder IntervalOrder::lex1() {
  return IntervalOrder(OrderKind::lex1, "lex1", {});
}
IntervalOrder IntervalOrder::lex2() {
  return IntervalOrder(OrderKind::lex2, "lex2", {});
}
IntervalOrder IntervalOrder::xu_yager() {
  return IntervalOrder(OrderKind::xu_yager, "xu-yager", {});
}
IntervalOrder IntervalOrder::t_inc() {
  return IntervalOrder(OrderKind::t_inc, "t-inc", {});
}
IntervalOrder IntervalOrder::custom(std::string name, Comparator cmp) {
  return IntervalOrder(OrderKind::custom, std::move(name), std::move(cmp));
}

std::optional<IntervalOrder> IntervalOrder::from_name(std::string_view name) {
  if (name == "lex1") return lex1();
  if (name == "lex2") return lex2();
  if (name == "xu-yager") return xu_yager();
  if (name == "t-inc") return t_inc();
  return std::nullopt;
}

std::strong_ordering IntervalOrder::compare(const Interval& a,
                                            const Interval& b) const {
  switch (kind_) {
    case OrderKind::lex1: return cmp_lex1(a, b);
    case OrderKind::lex2: return cmp_lex2(a, b);
    case OrderKind::xu_yager: return cmp_xu_yager(a, b);
    case OrderKind::t_inc: return cmp_t_inc(a, b);
    case OrderKind::custom: return custom_(a, b);
  }
  return std::strong_ordering::equal;  // unreachable
}

namespace detail {

void collect_supersets(int n, const Interval& inner,
                       std::vector<Interval>& out) {
  out.clear();
  out.reserve(static_cast<std::size_t>(inner.lo + 1) *
              static_cast<std::size_t>(n - inner.hi + 1));
  for (int a = 0; a <= inner.lo; ++a) {
    for (int b = inner.hi; b <= n; ++b) {
      out.push_back({a, b});
    }
  }
}

void sort_intervals(const IntervalOrder& ord, std::vector<Interval>& ivs,
                    std::uint64_t* comparisons) {
  if (comparisons) {
    std::sort(ivs.begin(), ivs.end(),
              [&ord, comparisons](const Interval& a, const Interval& b) {
                ++*comparisons;
                return ord.compare(a, b) == std::strong_ordering::less;
              });
  } else {
    std::sort(ivs.begin(), ivs.end(),
              [&ord](const Interval& a, const Interval& b) {
                return ord.compare(a, b) == std::strong_ordering::less;
              });
  }
  if (ord.kind() == OrderKind::custom) {
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      if (ord.compare(ivs[i - 1], ivs[i]) != std::strong_ordering::less) {
        throw Error(Errc::inconsistent_order,
                    "comparator '" + ord.name() + "' does not separate " +
                        to_text(ivs[i - 1]) + " and " + to_text(ivs[i]));
      }
    }
  }
}

}  // namespace detail

std::vector<Interval> sorted_intervals(const IntervalOrder& ord, int n) {
  if (n < 0) throw Error(Errc::invalid_params, "chain size must be >= 0");
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      ivs.push_back({a, b});
    }
  }
  detail::sort_intervals(ord, ivs, nullptr);
  return ivs;
}

std::vector<Interval> containing_intervals(const IntervalOrder& ord, int n,
                                           const Interval& inner) {
  if (!inner.in_chain(n)) {
    throw Error(Errc::chain_mismatch,
                to_text(inner) + " is not an interval of the chain {0.." +
                    std::to_string(n) + "}");
  }
  std::vector<Interval> ivs;
  detail::collect_supersets(n, inner, ivs);
  detail::sort_intervals(ord, ivs, nullptr);
  return ivs;
}

AdmissibilityResult is_admissible(const IntervalOrder& ord, int n) {
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      for (int c = a; c <= n; ++c) {
        for (int d = std::max(b, c); d <= n; ++d) {
          // [a,b] <=2 [c,d] by construction
          const Interval lhs{a, b}, rhs{c, d};
          if (ord.compare(lhs, rhs) == std::strong_ordering::greater) {
            return {false, std::make_pair(lhs, rhs)};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<std::string> find_order_violation(const IntervalOrder& ord,
                                                int n) {
  std::vector<Interval> ivs;
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) ivs.push_back({a, b});
  }
  for (const Interval& x : ivs) {
    if (ord.compare(x, x) != std::strong_ordering::equal) {
      return "not reflexive at " + to_text(x);
    }
  }
  for (const Interval& x : ivs) {
    for (const Interval& y : ivs) {
      const auto xy = ord.compare(x, y);
      const auto yx = ord.compare(y, x);
      if (xy == std::strong_ordering::equal && !(x == y)) {
        return "distinct intervals compare equal: " + to_text(x) + " vs " +
               to_text(y);
      }
      if ((xy == std::strong_ordering::less) !=
          (yx == std::strong_ordering::greater)) {
        return "asymmetric comparison between " + to_text(x) + " and " +
               to_text(y);
      }
    }
  }
  for (const Interval& x : ivs) {
    for (const Interval& y : ivs) {
      if (ord.compare(x, y) != std::strong_ordering::less) continue;
      for (const Interval& z : ivs) {
        if (ord.compare(y, z) == std::strong_ordering::less &&
            ord.compare(x, z) != std::strong_ordering::less) {
          return "not transitive on " + to_text(x) + ", " + to_text(y) +
                 ", " + to_text(z);
        }
      }
    }
  }
  return std::nullopt;
}

std::strong_ordering compare_cut_chains(const IntervalOrder& ord,
                                        const AlphaCutChain& a,
                                        const AlphaCutChain& b) {
  if (!a.params.same_chain(b.params)) {
    throw Error(Errc::chain_mismatch,
                "cannot compare dfns over different chains");
  }
  for (int j = a.params.m; j >= 1; --j) {
    if (a.cut(j) == b.cut(j)) continue;
    return ord.compare(a.cut(j), b.cut(j));
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_dfn(const IntervalOrder& ord, const Dfn& a,
                                 const Dfn& b) {
  if (!a.params.same_chain(b.params)) {
    throw Error(Errc::chain_mismatch,
                "cannot compare dfns over different chains");
  }
  return compare_cut_chains(ord, to_alpha_cuts(a), to_alpha_cuts(b));
}

}  // namespace dfnrank
