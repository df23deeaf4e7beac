#include "dfnrank/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "dfnrank/rank.hpp"

namespace dfnrank {

UniformIndexSampler::UniformIndexSampler(BigCount exclusive_bound,
                                         std::uint64_t seed)
    : bound_(std::move(exclusive_bound)), rng_(seed) {
  if (bound_ <= 0) {
    throw Error(Errc::invalid_params, "sampling bound must be positive");
  }
  BigCount top = bound_ - 1;
  bits_ = top == 0 ? 1 : mpz_sizeinbase(top.get_mpz_t(), 2);
  words_ = (bits_ + 63) / 64;
}

BigCount UniformIndexSampler::next() {
  const std::size_t excess = words_ * 64 - bits_;
  while (true) {
    BigCount value = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      value <<= 64;
      value += BigCount(static_cast<unsigned long>(rng_()));
    }
    value >>= excess;  // keep exactly bits_ random bits
    if (value < bound_) return value;
  }
}

const char* to_string(BenchOp op) {
  return op == BenchOp::unrank ? "unrank" : "rank";
}

void BenchConfig::validate() const {
  if (n < 0) throw Error(Errc::invalid_params, "bench needs n >= 0");
  if (trials < 1) throw Error(Errc::invalid_params, "bench needs K >= 1");
  if (m_list.empty()) {
    throw Error(Errc::invalid_params, "bench needs at least one m");
  }
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 2) {
      throw Error(Errc::invalid_params, "every m must be >= 2");
    }
    if (i > 0 && m_list[i] <= m_list[i - 1]) {
      throw Error(Errc::invalid_params, "m list must be strictly ascending");
    }
  }
}

namespace {

struct Stats {
  double mean = 0.0;
  double std_dev = 0.0;
};

Stats mean_std(const std::vector<double>& xs) {
  Stats s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0,
                  std::chrono::steady_clock::time_point t1) {
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string format_ms(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

std::vector<BenchSample> run_bench(const BenchConfig& cfg) {
  cfg.validate();
  struct Group {
    ChainParams params;
    std::vector<BigCount> indices;
    std::vector<double> unrank_ms;
    std::vector<double> rank_ms;
  };
  std::vector<Group> groups;
  for (int m : cfg.m_list) {
    Group g{ChainParams(cfg.n, m), {}, {}, {}};
    UniformIndexSampler sampler(total_dfns(cfg.n, m), cfg.seed);
    (void)pos_inv(cfg.order, g.params, sampler.next());  // discarded warm-up
    g.indices.reserve(static_cast<std::size_t>(cfg.trials));
    for (int t = 0; t < cfg.trials; ++t) g.indices.push_back(sampler.next());
    g.unrank_ms.reserve(g.indices.size());
    g.rank_ms.reserve(g.indices.size());
    groups.push_back(std::move(g));
  }

  // one coupled unrank-then-rank measurement per trial, trials interleaved
  // round-robin across the m values so that host load bursts spread evenly
  // over every group instead of distorting a single mean
  for (int t = 0; t < cfg.trials; ++t) {
    for (Group& g : groups) {
      const auto t0 = std::chrono::steady_clock::now();
      const Dfn d =
          pos_inv(cfg.order, g.params, g.indices[static_cast<std::size_t>(t)]);
      const auto t1 = std::chrono::steady_clock::now();
      (void)pos(cfg.order, d);
      const auto t2 = std::chrono::steady_clock::now();
      g.unrank_ms.push_back(elapsed_ms(t0, t1));
      g.rank_ms.push_back(elapsed_ms(t1, t2));
    }
  }

  std::vector<BenchSample> out;
  for (const Group& g : groups) {
    const Stats u = mean_std(g.unrank_ms);
    const Stats r = mean_std(g.rank_ms);
    out.push_back({g.params.m, BenchOp::unrank, u.mean, u.std_dev,
                   cfg.trials});
    out.push_back({g.params.m, BenchOp::rank, r.mean, r.std_dev,
                   cfg.trials});
  }
  return out;
}

LogLogFit fit_loglog(const std::vector<BenchSample>& samples, BenchOp op) {
  std::vector<double> xs, ys;
  std::set<int> distinct_m;
  for (const BenchSample& s : samples) {
    if (s.op != op) continue;
    if (s.mean_ms <= 0.0) {
      throw Error(Errc::degenerate_input,
                  "log-log fit needs strictly positive means");
    }
    distinct_m.insert(s.m);
    xs.push_back(std::log(static_cast<double>(s.m)));
    ys.push_back(std::log(s.mean_ms));
  }
  if (distinct_m.size() < 3) {
    throw Error(Errc::degenerate_input,
                "log-log fit needs at least 3 samples with distinct m");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw Error(Errc::degenerate_input, "all m values coincide");
  }
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

void emit_csv(const std::vector<BenchSample>& samples, std::ostream& out) {
  out << "m,op,mean_ms,std_ms,trials\n";
  for (const BenchSample& s : samples) {
    out << s.m << ',' << to_string(s.op) << ',' << format_ms(s.mean_ms)
        << ',' << format_ms(s.std_ms) << ',' << s.trials << '\n';
  }
}

void emit_csv(const std::vector<BenchSample>& samples,
              const std::string& path) {
  std::ofstream file(path);
  if (!file) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  }
  emit_csv(samples, file);
  if (!file.good()) {
    throw Error(Errc::io_error, "failed writing '" + path + "'");
  }
}

namespace {

struct Series {
  std::vector<double> xs;
  std::vector<double> ys;
};

Series series_of(const std::vector<BenchSample>& samples, BenchOp op,
                 bool log10_axes) {
  Series s;
  for (const BenchSample& b : samples) {
    if (b.op != op) continue;
    const double x = static_cast<double>(b.m);
    const double y = b.mean_ms;
    if (log10_axes) {
      s.xs.push_back(std::log10(x));
      s.ys.push_back(std::log10(y));
    } else {
      s.xs.push_back(x);
      s.ys.push_back(y);
    }
  }
  return s;
}

struct Panel {
  double x0, y0, w, h;          // plot area in svg coordinates
  double xmin, xmax, ymin, ymax;  // data ranges

  double sx(double x) const {
    return x0 + (x - xmin) / (xmax - xmin) * w;
  }
  double sy(double y) const {
    return y0 + h - (y - ymin) / (ymax - ymin) * h;
  }
};

void expand_range(double& lo, double& hi, const std::vector<double>& vs) {
  for (double v : vs) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
}

std::string polyline(const Panel& p, const Series& s, const char* color) {
  std::ostringstream os;
  os << "<polyline fill='none' stroke='" << color
     << "' stroke-width='1.5' points='";
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    os << p.sx(s.xs[i]) << ',' << p.sy(s.ys[i]) << ' ';
  }
  os << "'/>\n";
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    os << "<circle cx='" << p.sx(s.xs[i]) << "' cy='" << p.sy(s.ys[i])
       << "' r='2.5' fill='" << color << "'/>\n";
  }
  return os.str();
}

std::string frame(const Panel& p, const std::string& title,
                  const std::string& xlabel, const std::string& ylabel) {
  std::ostringstream os;
  os << "<rect x='" << p.x0 << "' y='" << p.y0 << "' width='" << p.w
     << "' height='" << p.h << "' fill='none' stroke='black'/>\n"
     << "<text x='" << p.x0 + p.w / 2 << "' y='" << p.y0 - 8
     << "' text-anchor='middle' font-size='13'>" << title << "</text>\n"
     << "<text x='" << p.x0 + p.w / 2 << "' y='" << p.y0 + p.h + 30
     << "' text-anchor='middle' font-size='11'>" << xlabel << "</text>\n"
     << "<text x='" << p.x0 - 42 << "' y='" << p.y0 + p.h / 2
     << "' text-anchor='middle' font-size='11' transform='rotate(-90 "
     << p.x0 - 42 << ' ' << p.y0 + p.h / 2 << ")'>" << ylabel
     << "</text>\n";
  // corner ticks with values
  os << std::fixed << std::setprecision(2);
  os << "<text x='" << p.x0 << "' y='" << p.y0 + p.h + 14
     << "' font-size='10' text-anchor='middle'>" << p.xmin << "</text>\n"
     << "<text x='" << p.x0 + p.w << "' y='" << p.y0 + p.h + 14
     << "' font-size='10' text-anchor='middle'>" << p.xmax << "</text>\n"
     << "<text x='" << p.x0 - 4 << "' y='" << p.y0 + p.h
     << "' font-size='10' text-anchor='end'>" << p.ymin << "</text>\n"
     << "<text x='" << p.x0 - 4 << "' y='" << p.y0 + 8
     << "' font-size='10' text-anchor='end'>" << p.ymax << "</text>\n";
  return os.str();
}

}  // namespace

void emit_svg(const std::vector<BenchSample>& samples,
              const std::string& path) {
  std::ofstream file(path);
  if (!file) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  }
  const Series lin_u = series_of(samples, BenchOp::unrank, false);
  const Series lin_r = series_of(samples, BenchOp::rank, false);
  const Series log_u = series_of(samples, BenchOp::unrank, true);
  const Series log_r = series_of(samples, BenchOp::rank, true);

  Panel left{70, 40, 360, 300, 0, 1, 0, 1};
  Panel right{540, 40, 360, 300, 0, 1, 0, 1};
  left.xmin = left.ymin = 1e300;
  left.xmax = left.ymax = -1e300;
  expand_range(left.xmin, left.xmax, lin_u.xs);
  expand_range(left.xmin, left.xmax, lin_r.xs);
  expand_range(left.ymin, left.ymax, lin_u.ys);
  expand_range(left.ymin, left.ymax, lin_r.ys);
  left.ymin = 0.0;
  right.xmin = right.ymin = 1e300;
  right.xmax = right.ymax = -1e300;
  expand_range(right.xmin, right.xmax, log_u.xs);
  expand_range(right.xmin, right.xmax, log_r.xs);
  expand_range(right.ymin, right.ymax, log_u.ys);
  expand_range(right.ymin, right.ymax, log_r.ys);
  auto widen = [](double& lo, double& hi) {
    const double pad = (hi - lo) * 0.05 + 1e-12;
    lo -= pad;
    hi += pad;
  };
  widen(left.xmin, left.xmax);
  widen(left.ymin, left.ymax);
  widen(right.xmin, right.xmax);
  widen(right.ymin, right.ymax);

  file << "<svg xmlns='http://www.w3.org/2000/svg' width='960' height='400' "
          "viewBox='0 0 960 400' font-family='sans-serif'>\n";
  file << frame(left, "mean time vs m", "m", "mean time (ms)");
  file << polyline(left, lin_u, "#1f77b4");
  file << polyline(left, lin_r, "#d62728");
  file << frame(right, "log-log with linear fit", "log10 m",
                "log10 mean time");
  file << polyline(right, log_u, "#1f77b4");
  file << polyline(right, log_r, "#d62728");

  // fitted lines and slope annotations on the log-log panel
  const double ln10 = std::log(10.0);
  int row = 0;
  for (BenchOp op : {BenchOp::unrank, BenchOp::rank}) {
    LogLogFit fit;
    try {
      fit = fit_loglog(samples, op);
    } catch (const Error&) {
      continue;
    }
    const char* color = op == BenchOp::unrank ? "#1f77b4" : "#d62728";
    // y = slope * x + intercept holds in natural logs and in log10 alike
    const double y1 = fit.slope * right.xmin + fit.intercept / ln10;
    const double y2 = fit.slope * right.xmax + fit.intercept / ln10;
    file << "<line x1='" << right.sx(right.xmin) << "' y1='" << right.sy(y1)
         << "' x2='" << right.sx(right.xmax) << "' y2='" << right.sy(y2)
         << "' stroke='" << color << "' stroke-dasharray='4 3'/>\n";
    file << "<text x='" << right.x0 + 10 << "' y='"
         << right.y0 + 16 + 14 * row << "' font-size='11' fill='" << color
         << "'>" << to_string(op) << " slope " << std::setprecision(3)
         << fit.slope << "</text>\n";
    ++row;
  }
  // legend
  file << "<text x='80' y='58' font-size='11' fill='#1f77b4'>unrank</text>\n"
       << "<text x='80' y='72' font-size='11' fill='#d62728'>rank</text>\n";
  file << "</svg>\n";
  if (!file.good()) {
    throw Error(Errc::io_error, "failed writing '" + path + "'");
  }
}

}  // namespace dfnrank
