// Acceptance suite: exercises every contract the artifact commits to, one
// criterion per section, printing a single PASS/FAIL line each. Exit code
// is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "dfnrank/bench.hpp"
#include "dfnrank/connectives.hpp"
#include "dfnrank/core.hpp"
#include "dfnrank/counting.hpp"
#include "dfnrank/oracle.hpp"
#include "dfnrank/orders.hpp"
#include "dfnrank/rank.hpp"

using namespace dfnrank;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<void(std::string&)> run;  // throws or appends detail on fail
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

const std::vector<IntervalOrder>& all_orders() {
  static const std::vector<IntervalOrder> orders = {
      IntervalOrder::t_inc(), IntervalOrder::lex1(), IntervalOrder::lex2(),
      IntervalOrder::xu_yager()};
  return orders;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<BigCount> accumulated(const LevelStep& step) {
  std::vector<BigCount> out;
  for (const auto& row : step.rows) out.push_back(row.accumulated);
  return out;
}

void criterion1(std::string& detail) {
  const ChainParams p56(5, 6);
  const auto t_inc = IntervalOrder::t_inc();
  (void)pos_inv(t_inc, p56, 49);  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  const Dfn d = pos_inv(t_inc, p56, 49);
  const double elapsed = ms_since(t0);
  require(d.levels == std::vector<int>({6, 6, 6, 3, 2, 2}),
          "unrank(49) returned " + to_text(d));
  require(to_membership_text(d) ==
              "{1/0, 1/1, 1/2, 0.4/3, 0.2/4, 0.2/5}",
          "membership rendering is " + to_membership_text(d));
  const auto trace = pos_trace(t_inc, p56, BigCount(49));
  require(accumulated(trace.steps[0]) ==
              std::vector<BigCount>({1, 6, 21, 56}),
          "level-6 accumulated counts differ");
  require(accumulated(trace.steps[1]) ==
              std::vector<BigCount>({1, 5, 15, 35}),
          "level-5 accumulated counts differ");
  require(elapsed < 1.0,
          "unrank took " + std::to_string(elapsed) + " ms, budget 1 ms");
  detail = "unrank(49) = 6,6,6,3,2,2 in " + std::to_string(elapsed) + " ms";
}

void criterion2(std::string& detail) {
  const ChainParams p56(5, 6);
  const Dfn d = validate_dfn(p56, {6, 6, 6, 2, 1, 1});
  const BigCount position = pos(IntervalOrder::t_inc(), d);
  require(position == 54, "rank returned " + to_decimal(position));
  const auto trace = pos_trace(IntervalOrder::t_inc(), d);
  const std::vector<BigCount> expected = {22, 37, 47, 53, 55, 55};
  require(trace.steps.size() == expected.size(), "trace has wrong depth");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    require(trace.steps[i].counter_after == expected[i],
            "accumulator after level " +
                std::to_string(trace.steps[i].level) + " is " +
                to_decimal(trace.steps[i].counter_after));
  }
  detail = "rank(6,6,6,2,1,1) = 54, accumulators 22,37,47,53,55,55";
}

void criterion3(std::string& detail) {
  require(total_dfns(5, 6) == 3003, "total_dfns(5,6) != 3003");
  require(interval_count(5) == 21, "interval_count(5) != 21");
  require(sdfn_count(0, 2, 6, 5) == 35, "sdfn_count(0,2,6,5) != 35");
  require(sdfn_count(0, 3, 5, 5) == 10, "sdfn_count(0,3,5,5) != 10");
  detail = "3003 / 21 / 35 / 10";
}

void criterion4(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t instances = 0;
  for (const auto& ord : all_orders()) {
    std::vector<ChainParams> cases;
    for (int n = 0; n <= 4; ++n) {
      for (int m = 2; m <= 4; ++m) cases.emplace_back(n, m);
    }
    cases.emplace_back(5, 6);
    for (const auto& params : cases) {
      const auto report = cross_check(ord, params);
      instances += report.checked;
      require(report.ok(), report.summary());
    }
  }
  const double elapsed = ms_since(t0);
  require(elapsed < 60000.0,
          "cross-check took " + std::to_string(elapsed / 1000.0) + " s");
  detail = std::to_string(instances) + " dfns cross-checked under 4 orders in " +
           std::to_string(elapsed / 1000.0) + " s, 0 mismatches";
}

void criterion5(std::string& detail) {
  const ChainParams params(3, 3);
  for (const auto& ord : all_orders()) {
    const auto all = enumerate_all(params);
    std::vector<BigCount> ranks;
    for (const auto& d : all) ranks.push_back(pos(ord, d));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool below =
            compare_dfn(ord, all[i], all[j]) == std::strong_ordering::less;
        require(below == (ranks[i] < ranks[j]),
                "isomorphism breaks under " + ord.name() + " at pair (" +
                    to_text(all[i]) + ", " + to_text(all[j]) + ")");
      }
    }
  }
  detail = "compare_dfn <=> pos order on all 35^2 pairs, 4 orders";
}

void criterion6(std::string& detail) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 2; m <= 6; ++m) {
      BigCount sum = 0;
      for (int a = 0; a <= n; ++a) {
        for (int b = a; b <= n; ++b) sum += sdfn_count(a, b, m, n);
      }
      require(sum == total_dfns(n, m),
              "partition fails at n=" + std::to_string(n) +
                  " m=" + std::to_string(m));
    }
  }
  detail = "core partition identity exact for all n<=6, m<=6";
}

void criterion7(std::string& detail) {
  for (int n = 0; n <= 6; ++n) {
    require(is_admissible(IntervalOrder::lex1(), n).admissible,
            "lex1 flagged non-admissible at n=" + std::to_string(n));
    require(is_admissible(IntervalOrder::lex2(), n).admissible,
            "lex2 flagged non-admissible at n=" + std::to_string(n));
    require(is_admissible(IntervalOrder::xu_yager(), n).admissible,
            "xu-yager flagged non-admissible at n=" + std::to_string(n));
  }
  // t-inc has violating pairs on every chain with at least two points
  for (int n = 1; n <= 6; ++n) {
    const auto result = is_admissible(IntervalOrder::t_inc(), n);
    require(!result.admissible,
            "t-inc passed admissibility at n=" + std::to_string(n));
    require(result.witness.has_value(), "missing witness");
    const auto [i, j] = *result.witness;
    require(i.lo <= j.lo && i.hi <= j.hi &&
                IntervalOrder::t_inc().compare(i, j) ==
                    std::strong_ordering::greater,
            "witness pair is not a violation");
  }
  require(IntervalOrder::t_inc().compare({0, 2}, {0, 5}) ==
              std::strong_ordering::greater,
          "([0,2],[0,5]) is not a violation");
  detail = "lex1/lex2/xu-yager admissible, t-inc not (witness verified)";
}

void criterion8(std::string& detail) {
  for (const auto& f : builtin_index_implications()) {
    for (long k : {2L, 20L, 100L}) {
      const auto result = check_implication_axioms(f, k);
      require(result.ok, f.name + " fails axioms at k=" +
                             std::to_string(k) + ": " + result.detail);
    }
  }
  const ChainParams params(3, 3);
  for (const auto& ord : all_orders()) {
    const auto sorted = oracle_sorted(ord, params);
    for (const auto& f : builtin_index_implications()) {
      require(lift_binary(ord, params, f, sorted.front(), sorted.front()) ==
                  sorted.back(),
              f.name + "/" + ord.name() + ": I(min,min) != max");
      require(lift_binary(ord, params, f, sorted.back(), sorted.back()) ==
                  sorted.back(),
              f.name + "/" + ord.name() + ": I(max,max) != max");
      require(lift_binary(ord, params, f, sorted.back(), sorted.front()) ==
                  sorted.front(),
              f.name + "/" + ord.name() + ": I(max,min) != min");
      for (std::size_t x = 0; x < sorted.size(); ++x) {
        for (std::size_t y = 0; y < sorted.size(); ++y) {
          if (x + 1 < sorted.size()) {
            const Dfn wider =
                lift_binary(ord, params, f, sorted[x], sorted[y]);
            const Dfn narrower =
                lift_binary(ord, params, f, sorted[x + 1], sorted[y]);
            require(compare_dfn(ord, narrower, wider) !=
                        std::strong_ordering::greater,
                    f.name + "/" + ord.name() +
                        " increases in the first argument");
          }
          if (y + 1 < sorted.size()) {
            const Dfn lower =
                lift_binary(ord, params, f, sorted[x], sorted[y]);
            const Dfn higher =
                lift_binary(ord, params, f, sorted[x], sorted[y + 1]);
            require(compare_dfn(ord, lower, higher) !=
                        std::strong_ordering::greater,
                    f.name + "/" + ord.name() +
                        " decreases in the second argument");
          }
        }
      }
    }
  }
  detail =
      "3 implications x k in {2,20,100}; lifted boundary + monotonicity on "
      "the 35-element lattice, 4 orders";
}

void criterion9(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  BenchConfig cfg;
  cfg.n = 10;
  cfg.m_list = {100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
  cfg.trials = 500;
  cfg.order = IntervalOrder::t_inc();
  cfg.seed = 42;
  const auto samples = run_bench(cfg);
  for (BenchOp op : {BenchOp::unrank, BenchOp::rank}) {
    double last = 0.0;
    for (const auto& s : samples) {
      if (s.op != op) continue;
      require(s.mean_ms >= last,
              std::string(to_string(op)) + " mean dips at m=" +
                  std::to_string(s.m) + " (" + std::to_string(s.mean_ms) +
                  " < " + std::to_string(last) + ")");
      last = s.mean_ms;
    }
    const auto fit = fit_loglog(samples, op);
    require(0.85 <= fit.slope && fit.slope <= 1.15,
            std::string(to_string(op)) + " log-log slope " +
                std::to_string(fit.slope) + " outside [0.85, 1.15]");
  }
  const double unrank_slope = fit_loglog(samples, BenchOp::unrank).slope;
  const double rank_slope = fit_loglog(samples, BenchOp::rank).slope;
  detail = "slopes unrank " + std::to_string(unrank_slope) + ", rank " +
           std::to_string(rank_slope) + "; monotone means; " +
           std::to_string(ms_since(t0) / 1000.0) + " s";
}

void criterion10(std::string& detail) {
  const ChainParams params(10, 1000);
  const auto t_inc = IntervalOrder::t_inc();
  const BigCount total = total_dfns(10, 1000);
  UniformIndexSampler sampler(total, 99);
  for (int trial = 0; trial < 1000; ++trial) {
    const BigCount index = sampler.next();
    const Dfn d = pos_inv(t_inc, params, index);
    const BigCount back = pos(t_inc, d);
    require(back == index, "round trip broke at index " + to_decimal(index));
  }
  detail = "1000 random round trips at (n=10, m=1000), N = " +
           to_decimal(total);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden unranking with level tables", criterion1},
      {2, "golden ranking with accumulator trace", criterion2},
      {3, "cardinalities", criterion3},
      {4, "oracle equivalence across orders", criterion4},
      {5, "order isomorphism", criterion5},
      {6, "partition identity", criterion6},
      {7, "admissibility verdicts", criterion7},
      {8, "lifted connectives", criterion8},
      {9, "scaling study", criterion9},
      {10, "big-number round trip", criterion10},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = true;
    try {
      criterion.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    std::printf("%s %2d %s%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.title.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
