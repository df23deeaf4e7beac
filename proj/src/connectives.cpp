#include "dfnrank/connectives.hpp"

#include "dfnrank/rank.hpp"

namespace dfnrank {

namespace {

BigCount lukasiewicz(const BigCount& x, const BigCount& y,
                     const BigCount& k) {
  BigCount v = k - x + y;
  return v < k ? v : k;
}

BigCount goedel(const BigCount& x, const BigCount& y, const BigCount& k) {
  return x <= y ? k : y;
}

BigCount rescher(const BigCount& x, const BigCount& y, const BigCount& k) {
  return x <= y ? k : BigCount(0);
}

BigCount index_min(const BigCount& x, const BigCount& y, const BigCount&) {
  return x <= y ? x : y;
}

BigCount index_max(const BigCount& x, const BigCount& y, const BigCount&) {
  return x >= y ? x : y;
}

BigCount index_mean(const BigCount& x, const BigCount& y, const BigCount&) {
  return (x + y + 1) / 2;  // half rounds up
}

}  // namespace

const std::vector<IndexFunction>& builtin_index_implications() {
  static const std::vector<IndexFunction> catalog = {
      {"lukasiewicz", 2, lukasiewicz},
      {"goedel", 2, goedel},
      {"rescher", 2, rescher},
  };
  return catalog;
}

const std::vector<IndexFunction>& builtin_index_aggregations() {
  static const std::vector<IndexFunction> catalog = {
      {"min", 2, index_min},
      {"max", 2, index_max},
      {"mean", 2, index_mean},
  };
  return catalog;
}

std::optional<IndexFunction> find_index_function(std::string_view name) {
  for (const auto& f : builtin_index_implications()) {
    if (f.name == name) return f;
  }
  for (const auto& f : builtin_index_aggregations()) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

AxiomCheckResult check_implication_axioms(const IndexFunction& f,
                                          const BigCount& k,
                                          const BigCount& max_k) {
  if (k < 1) {
    throw Error(Errc::invalid_params, "axiom check needs k >= 1");
  }
  if (k > max_k) {
    throw Error(Errc::cap_exceeded,
                "exhaustive axiom check capped at k = " + to_decimal(max_k));
  }
  const BigCount zero = 0;
  auto at = [&](const BigCount& x, const BigCount& y) {
    BigCount v = f.apply(x, y, k);
    if (v < 0 || v > k) {
      throw Error(Errc::range_violation,
                  f.name + "(" + to_decimal(x) + "," + to_decimal(y) +
                      ") = " + to_decimal(v) + " escapes [0," +
                      to_decimal(k) + "]");
    }
    return v;
  };
  if (at(k, zero) != 0) {
    return {false, "f(k,0) = " + to_decimal(at(k, zero)) + ", expected 0"};
  }
  if (at(zero, zero) != k) {
    return {false, "f(0,0) = " + to_decimal(at(zero, zero)) +
                       ", expected " + to_decimal(k)};
  }
  if (at(k, k) != k) {
    return {false, "f(k,k) = " + to_decimal(at(k, k)) + ", expected " +
                       to_decimal(k)};
  }
  // adjacent steps imply the full monotonicity by transitivity
  for (BigCount y = 0; y <= k; ++y) {
    for (BigCount x = 0; x < k; ++x) {
      if (at(x + 1, y) > at(x, y)) {
        return {false, "increasing in the first argument at (" +
                           to_decimal(x) + "->" + to_decimal(x + 1) + ", " +
                           to_decimal(y) + ")"};
      }
    }
  }
  for (BigCount x = 0; x <= k; ++x) {
    for (BigCount y = 0; y < k; ++y) {
      if (at(x, y + 1) < at(x, y)) {
        return {false, "decreasing in the second argument at (" +
                           to_decimal(x) + ", " + to_decimal(y) + "->" +
                           to_decimal(y + 1) + ")"};
      }
    }
  }
  return {true, ""};
}

Dfn lift_binary(const IntervalOrder& ord, const ChainParams& params,
                const IndexFunction& f, const Dfn& a, const Dfn& b) {
  if (!a.params.same_chain(params) || !b.params.same_chain(params)) {
    throw Error(Errc::chain_mismatch,
                "operands belong to a different chain than the lift");
  }
  const BigCount k = total_dfns(params.n, params.m) - 1;
  const BigCount image = f.apply(pos(ord, a), pos(ord, b), k);
  if (image < 0 || image > k) {
    throw Error(Errc::range_violation,
                f.name + " produced " + to_decimal(image) +
                    ", outside [0," + to_decimal(k) + "]");
  }
  return pos_inv(ord, params, image);
}

}  // namespace dfnrank
