#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfnrank/core.hpp"
#include "dfnrank/counting.hpp"
#include "dfnrank/orders.hpp"

namespace dfnrank {

/// A closed-form rule on the index chain {0..k}, parameterized by k at call
/// time so one definition serves every lattice size. All arithmetic is
/// exact bigint; k is astronomically large for realistic m.
struct IndexFunction {
  std::string name;
  int arity = 2;
  std::function<BigCount(const BigCount& x, const BigCount& y,
                         const BigCount& k)>
      apply;
};

/// Standard implication families on a finite chain:
///   lukasiewicz  min(k, k - x + y)
///   goedel       k if x <= y, else y
///   rescher      k if x <= y, else 0
const std::vector<IndexFunction>& builtin_index_implications();

/// Aggregation examples on the index chain: min, max, and the rounded mean
/// (half-up).
const std::vector<IndexFunction>& builtin_index_aggregations();

/// Looks up any built-in (implication or aggregation) by name.
std::optional<IndexFunction> find_index_function(std::string_view name);

struct AxiomCheckResult {
  bool ok = false;
  std::string detail;  // violated axiom and witness point(s) when !ok
};

/// Exhaustively verifies the discrete-implication axioms on {0..k}:
/// f(0,0) = f(k,k) = k, f(k,0) = 0, nonincreasing in the first argument,
/// nondecreasing in the second. Adjacent-step monotonicity checks cover all
/// pairs by transitivity. Throws Errc::cap_exceeded for k > max_k.
AxiomCheckResult check_implication_axioms(const IndexFunction& f,
                                          const BigCount& k,
                                          const BigCount& max_k = 10000);

/// Transports f through the position bijection:
///   result = pos_inv(f(pos(a), pos(b), k)),  k = total_dfns(n, m) - 1.
/// Throws Errc::range_violation if f leaves [0, k].
Dfn lift_binary(const IntervalOrder& ord, const ChainParams& params,
                const IndexFunction& f, const Dfn& a, const Dfn& b);

}  // namespace dfnrank
