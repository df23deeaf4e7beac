#include "dfnrank/counting.hpp"

#include <algorithm>

namespace dfnrank {

BigCount binomial(long a, long b) {
  if (b == -1) return a == -1 ? 1 : 0;
  if (b < -1 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  // running product with exact division at every step
  BigCount result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= static_cast<unsigned long>(a - b + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

BigCount total_dfns(int n, int m) {
  if (n < 0 || m < 2) {
    throw Error(Errc::invalid_params, "total_dfns needs n >= 0 and m >= 2");
  }
  return binomial(static_cast<long>(n) + 2L * m - 2, 2L * m - 2);
}

BigCount interval_count(int n) {
  if (n < 0) throw Error(Errc::invalid_params, "interval_count needs n >= 0");
  BigCount count = n + 1;
  count *= n + 2;
  count /= 2;
  return count;
}

BigCount sdfn_count(int lo, int hi, int level, int n) {
  if (lo < 0 || lo > hi || hi > n) {
    throw Error(Errc::invalid_interval,
                "[" + std::to_string(lo) + "," + std::to_string(hi) +
                    "] is not an interval of the chain {0.." +
                    std::to_string(n) + "}");
  }
  if (level < 1) {
    throw Error(Errc::invalid_params, "level index must be >= 1");
  }
  return binomial(static_cast<long>(lo) + level - 2,
                  static_cast<long>(level) - 2) *
         binomial(static_cast<long>(n) - hi + level - 2,
                  static_cast<long>(level) - 2);
}

BigCount parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(Errc::invalid_argument,
                "'" + std::string(text) + "' is not a decimal integer");
  }
  return BigCount(std::string(text), 10);
}

}  // namespace dfnrank
