#include "dfnrank/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace dfnrank {

namespace {

std::string format_value(double v) {
  // shortest round-trip-ish decimal, no trailing zeros
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

ChainParams::ChainParams(int n_, int m_, std::vector<double> values_)
    : n(n_), m(m_), values(std::move(values_)) {
  if (n < 0) throw Error(Errc::invalid_params, "chain size n must be >= 0");
  if (m < 2) {
    throw Error(Errc::invalid_params, "membership scale needs m >= 2 levels");
  }
  if (!values.empty()) {
    if (static_cast<int>(values.size()) != m) {
      throw Error(Errc::invalid_params,
                  "display scale must have exactly m values");
    }
    if (values.front() != 0.0 || values.back() != 1.0) {
      throw Error(Errc::invalid_params, "display scale must run from 0 to 1");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (!(values[i - 1] < values[i])) {
        throw Error(Errc::invalid_params,
                    "display scale must be strictly increasing");
      }
    }
  }
}

std::vector<double> uniform_scale(int m) {
  std::vector<double> scale(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    scale[static_cast<std::size_t>(j)] =
        static_cast<double>(j) / static_cast<double>(m - 1);
  }
  return scale;
}

std::string to_text(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

Interval Dfn::core() const {
  int s = -1, t = -1;
  for (int x = 0; x <= params.n; ++x) {
    if (levels[static_cast<std::size_t>(x)] == params.m) {
      if (s < 0) s = x;
      t = x;
    }
  }
  return {s, t};
}

Interval Dfn::support() const {
  int s = -1, t = -1;
  for (int x = 0; x <= params.n; ++x) {
    if (levels[static_cast<std::size_t>(x)] >= 2) {
      if (s < 0) s = x;
      t = x;
    }
  }
  return {s, t};
}

Dfn validate_dfn(const ChainParams& params, std::vector<int> levels) {
  if (static_cast<int>(levels.size()) != params.n + 1) {
    throw Error(Errc::length_mismatch,
                "expected " + std::to_string(params.n + 1) +
                    " levels, got " + std::to_string(levels.size()));
  }
  for (int v : levels) {
    if (v < 1 || v > params.m) {
      throw Error(Errc::level_out_of_range,
                  "level " + std::to_string(v) + " outside 1.." +
                      std::to_string(params.m));
    }
  }
  if (std::find(levels.begin(), levels.end(), params.m) == levels.end()) {
    throw Error(Errc::not_normal, "no point reaches the top level " +
                                      std::to_string(params.m));
  }
  // nondecreasing up to the first maximum, nonincreasing after the last one
  bool falling = false;
  for (std::size_t x = 1; x < levels.size(); ++x) {
    if (levels[x] < levels[x - 1]) {
      falling = true;
    } else if (levels[x] > levels[x - 1] && falling) {
      throw Error(Errc::not_unimodal,
                  "membership rises again after falling at point " +
                      std::to_string(x));
    }
  }
  return Dfn{params, std::move(levels)};
}

AlphaCutChain to_alpha_cuts(const Dfn& a) {
  const int n = a.params.n;
  const int m = a.params.m;
  AlphaCutChain chain{a.params, std::vector<Interval>(
                                    static_cast<std::size_t>(m), {0, n})};
  Interval cur = a.core();
  chain.cut(m) = cur;
  for (int j = m - 1; j >= 2; --j) {
    while (cur.lo > 0 &&
           a.levels[static_cast<std::size_t>(cur.lo - 1)] >= j) {
      --cur.lo;
    }
    while (cur.hi < n &&
           a.levels[static_cast<std::size_t>(cur.hi + 1)] >= j) {
      ++cur.hi;
    }
    chain.cut(j) = cur;
  }
  return chain;  // cut(1) stays [0, n]
}

Dfn from_alpha_cuts(const AlphaCutChain& chain) {
  const int n = chain.params.n;
  const int m = chain.params.m;
  if (static_cast<int>(chain.cuts.size()) != m) {
    throw Error(Errc::invalid_params, "cut chain must have exactly m cuts");
  }
  if (chain.cut(1) != Interval{0, n}) {
    throw Error(Errc::base_cut_not_full,
                "level-1 cut must be the whole chain [0," +
                    std::to_string(n) + "], got " + to_text(chain.cut(1)));
  }
  for (int j = 1; j <= m; ++j) {
    if (!chain.cut(j).in_chain(n)) {
      throw Error(Errc::invalid_interval,
                  "cut " + to_text(chain.cut(j)) + " at level " +
                      std::to_string(j) + " is not an interval of the chain");
    }
    if (j > 1 && !chain.cut(j - 1).contains(chain.cut(j))) {
      throw Error(Errc::not_nested,
                  "cut " + to_text(chain.cut(j)) + " at level " +
                      std::to_string(j) + " escapes " +
                      to_text(chain.cut(j - 1)));
    }
  }
  std::vector<int> levels(static_cast<std::size_t>(n + 1), 1);
  for (int j = 2; j <= m; ++j) {
    const Interval& c = chain.cut(j);
    for (int x = c.lo; x <= c.hi; ++x) {
      levels[static_cast<std::size_t>(x)] = j;
    }
  }
  return Dfn{chain.params, std::move(levels)};
}

std::vector<int> relevant_levels(const Dfn& a) {
  std::vector<bool> seen(static_cast<std::size_t>(a.params.m + 1), false);
  for (int v : a.levels) {
    if (v >= 2) seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int j = 2; j <= a.params.m; ++j) {
    if (seen[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

std::string to_text(const Dfn& a) {
  std::string out;
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.levels[i]);
  }
  return out;
}

std::vector<int> parse_levels(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw Error(Errc::invalid_argument,
                  "malformed dfn text: expected comma-separated level "
                  "indices, got '" +
                      std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_membership_text(const Dfn& a) {
  const std::vector<double> scale =
      a.params.values.empty() ? uniform_scale(a.params.m) : a.params.values;
  std::string out = "{";
  for (int x = 0; x <= a.params.n; ++x) {
    if (x) out += ", ";
    out += format_value(
        scale[static_cast<std::size_t>(a.levels[static_cast<std::size_t>(x)] -
                                       1)]);
    out += "/" + std::to_string(x);
  }
  out += "}";
  return out;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_params: return "invalid_params";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::level_out_of_range: return "level_out_of_range";
    case Errc::not_normal: return "not_normal";
    case Errc::not_unimodal: return "not_unimodal";
    case Errc::not_nested: return "not_nested";
    case Errc::base_cut_not_full: return "base_cut_not_full";
    case Errc::chain_mismatch: return "chain_mismatch";
    case Errc::invalid_interval: return "invalid_interval";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::invalid_dfn: return "invalid_dfn";
    case Errc::instance_too_large: return "instance_too_large";
    case Errc::range_violation: return "range_violation";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::inconsistent_order: return "inconsistent_order";
    case Errc::io_error: return "io_error";
    case Errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace dfnrank
