#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dfnrank/counting.hpp"
#include "dfnrank/orders.hpp"

namespace dfnrank {

/// Uniform draws from {0, ..., bound-1} by rejection on fixed-width random
/// blocks: no modulo bias, deterministic for a fixed seed.
class UniformIndexSampler {
 public:
  UniformIndexSampler(BigCount exclusive_bound, std::uint64_t seed);

  BigCount next();

 private:
  BigCount bound_;
  std::size_t bits_;
  std::size_t words_;
  std::mt19937_64 rng_;
};

struct BenchConfig {
  int n = 10;
  std::vector<int> m_list = {100, 200, 300, 400, 500,
                             600, 700, 800, 900, 1000};
  int trials = 500;  // K
  IntervalOrder order = IntervalOrder::t_inc();
  std::uint64_t seed = 42;

  /// trials >= 1; m_list nonempty, ascending, all >= 2; n >= 0.
  void validate() const;
};

enum class BenchOp { unrank, rank };
const char* to_string(BenchOp op);

struct BenchSample {
  int m = 0;
  BenchOp op = BenchOp::unrank;
  double mean_ms = 0.0;
  double std_ms = 0.0;
  int trials = 0;
};

/// One coupled pass per m: K seeded uniform indices are unranked under the
/// clock, then the resulting dfns are ranked under the clock. One discarded
/// warm-up call per m; trials run sequentially, single-threaded. Returns an
/// unrank sample followed by a rank sample for each m.
std::vector<BenchSample> run_bench(const BenchConfig& cfg);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;  // of log(mean_ms) vs log(m), natural logs
};

/// Ordinary least squares on (log m, log mean) over the samples of one
/// operation. Throws Errc::degenerate_input for fewer than 3 distinct m or
/// non-positive means.
LogLogFit fit_loglog(const std::vector<BenchSample>& samples, BenchOp op);

/// CSV with header "m,op,mean_ms,std_ms,trials", one row per sample,
/// times with three decimals.
void emit_csv(const std::vector<BenchSample>& samples, std::ostream& out);
void emit_csv(const std::vector<BenchSample>& samples,
              const std::string& path);

/// Two-panel SVG: mean vs m, and the log-log view with fitted lines.
void emit_svg(const std::vector<BenchSample>& samples,
              const std::string& path);

}  // namespace dfnrank
