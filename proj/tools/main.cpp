// Command-line front end: exact ranking and unranking of discrete fuzzy
// numbers over a finite chain, plus counting, order diagnostics, lifted
// connectives, oracle verification and the scaling benchmark.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfnrank/bench.hpp"
#include "dfnrank/connectives.hpp"
#include "dfnrank/core.hpp"
#include "dfnrank/counting.hpp"
#include "dfnrank/oracle.hpp"
#include "dfnrank/orders.hpp"
#include "dfnrank/rank.hpp"

namespace {

using dfnrank::BigCount;
using dfnrank::ChainParams;
using dfnrank::Dfn;
using dfnrank::Errc;
using dfnrank::Error;
using dfnrank::IntervalOrder;
using nlohmann::json;

IntervalOrder order_from(const std::string& name) {
  auto ord = IntervalOrder::from_name(name);
  if (!ord) {
    throw Error(Errc::invalid_argument,
                "unknown order '" + name +
                    "' (expected lex1, lex2, xu-yager or t-inc)");
  }
  return *ord;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument,
                  "malformed scale value '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Dfn parse_dfn(const ChainParams& params, const std::string& text) {
  return dfnrank::validate_dfn(params, dfnrank::parse_levels(text));
}

json dfn_to_json(const Dfn& d) {
  json j;
  j["n"] = d.params.n;
  j["m"] = d.params.m;
  j["levels"] = d.levels;
  if (!d.params.values.empty()) j["values"] = d.params.values;
  return j;
}

void print_dfn(const Dfn& d, bool as_json) {
  if (as_json) {
    std::cout << dfn_to_json(d).dump() << "\n";
  } else {
    std::cout << dfnrank::to_text(d) << "\n";
    if (!d.params.values.empty()) {
      std::cout << dfnrank::to_membership_text(d) << "\n";
    }
  }
}

// "A:B:STEP" range or explicit comma list
std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    int a = 0, b = 0, step = 0;
    if (std::sscanf(text.c_str(), "%d:%d:%d", &a, &b, &step) != 3 ||
        step <= 0 || a > b) {
      throw Error(Errc::invalid_argument,
                  "malformed m range '" + text + "' (expected A:B:STEP)");
    }
    for (int m = a; m <= b; m += step) out.push_back(m);
    return out;
  }
  for (int v : dfnrank::parse_levels(text)) out.push_back(v);
  return out;
}

void print_trace_steps(const std::vector<dfnrank::LevelStep>& steps,
                       const char* counter_label) {
  for (const auto& step : steps) {
    std::cout << "level " << step.level << ": candidates "
              << step.candidate_count << ", chosen k=" << step.chosen_index
              << " -> " << dfnrank::to_text(step.chosen) << "\n";
    std::cout << "  k\tinterval\tcount\taccumulated\n";
    std::size_t k = 0;
    for (const auto& row : step.rows) {
      ++k;
      std::cout << "  " << k << '\t' << dfnrank::to_text(row.interval)
                << "\t\t" << dfnrank::to_decimal(row.count) << '\t'
                << dfnrank::to_decimal(row.accumulated) << "\n";
    }
    std::cout << "  " << counter_label << ": "
              << dfnrank::to_decimal(step.counter_after) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "Exact ranking/unranking of discrete fuzzy numbers over a finite "
      "chain under pluggable total interval orders"};
  app.require_subcommand(1);

  int n = 0, m = 2;
  std::string order_name = "t-inc";
  std::string dfn_text, index_text, impl_name, a_text, b_text;
  std::string values_text, m_list_text, csv_path, svg_path;
  bool as_json = false;

  auto* count = app.add_subcommand("count", "number of dfns over (n, m)");
  count->add_option("--n", n, "chain size")->required();
  count->add_option("--m", m, "membership levels")->required();

  auto* intervals =
      app.add_subcommand("intervals", "sorted interval listing of L_n");
  intervals->add_option("--n", n)->required();
  intervals->add_option("--order", order_name);

  auto* rank = app.add_subcommand("rank", "0-based position of a dfn");
  rank->add_option("--n", n)->required();
  rank->add_option("--m", m)->required();
  rank->add_option("--order", order_name);
  rank->add_option("--dfn", dfn_text, "comma-separated level indices")
      ->required();

  auto* unrank = app.add_subcommand("unrank", "dfn at a 0-based position");
  unrank->add_option("--n", n)->required();
  unrank->add_option("--m", m)->required();
  unrank->add_option("--order", order_name);
  unrank->add_option("--index", index_text, "decimal index")->required();
  unrank->add_option("--values", values_text, "display scale, e.g. 0,0.5,1");
  unrank->add_flag("--json", as_json, "structured output");

  auto* trace =
      app.add_subcommand("trace", "per-level candidate tables of a run");
  trace->add_option("--n", n)->required();
  trace->add_option("--m", m)->required();
  trace->add_option("--order", order_name);
  auto* trace_index = trace->add_option("--index", index_text);
  auto* trace_dfn = trace->add_option("--dfn", dfn_text);
  trace_index->excludes(trace_dfn);

  auto* admissible =
      app.add_subcommand("admissible", "does the order refine <=2 on L_n?");
  admissible->add_option("--n", n)->required();
  admissible->add_option("--order", order_name);

  auto* verify = app.add_subcommand(
      "verify", "cross-check rank/unrank against the brute-force oracle");
  verify->add_option("--n", n)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--order", order_name);
  verify->add_flag("--json", as_json);

  auto* lift = app.add_subcommand(
      "lift", "apply an index-chain connective through the bijection");
  lift->add_option("--n", n)->required();
  lift->add_option("--m", m)->required();
  lift->add_option("--order", order_name);
  lift->add_option("--impl", impl_name, "lukasiewicz|goedel|rescher")
      ->required();
  lift->add_option("--a", a_text)->required();
  lift->add_option("--b", b_text)->required();
  lift->add_flag("--json", as_json);

  auto* bench = app.add_subcommand("bench", "scaling benchmark over m");
  int bench_n = 10;
  int trials = 500;
  std::uint64_t seed = 42;
  bench->add_option("--n", bench_n)->capture_default_str();
  bench->add_option("--m-list", m_list_text,
                    "A:B:STEP range or comma list (default 100:1000:100)");
  bench->add_option("--trials", trials, "K per m")->capture_default_str();
  bench->add_option("--order", order_name);
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--csv", csv_path, "output CSV path")->required();
  bench->add_option("--svg", svg_path, "optional SVG plot path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (count->parsed()) {
    std::cout << dfnrank::to_decimal(dfnrank::total_dfns(n, m)) << "\n";
    return 0;
  }
  if (intervals->parsed()) {
    for (const auto& iv :
         dfnrank::sorted_intervals(order_from(order_name), n)) {
      std::cout << dfnrank::to_text(iv) << "\n";
    }
    return 0;
  }
  if (rank->parsed()) {
    const ChainParams params(n, m);
    const BigCount position =
        dfnrank::pos(order_from(order_name), parse_dfn(params, dfn_text));
    std::cout << dfnrank::to_decimal(position) << "\n";
    return 0;
  }
  if (unrank->parsed()) {
    std::vector<double> scale;
    if (!values_text.empty()) scale = parse_values(values_text);
    const ChainParams params(n, m, scale);
    const Dfn d = dfnrank::pos_inv(order_from(order_name), params,
                                   dfnrank::parse_decimal(index_text));
    print_dfn(d, as_json);
    return 0;
  }
  if (trace->parsed()) {
    const ChainParams params(n, m);
    const IntervalOrder ord = order_from(order_name);
    if (!index_text.empty()) {
      const auto t =
          dfnrank::pos_trace(ord, params, dfnrank::parse_decimal(index_text));
      print_trace_steps(t.steps, "residual after");
      std::cout << "result: " << dfnrank::to_text(t.result) << "\n";
    } else if (!dfn_text.empty()) {
      const auto t = dfnrank::pos_trace(ord, parse_dfn(params, dfn_text));
      print_trace_steps(t.steps, "accumulator after");
      std::cout << "position: " << dfnrank::to_decimal(t.position)
                << " (1-based count: "
                << dfnrank::to_decimal(t.position + 1) << ")\n";
    } else {
      throw Error(Errc::invalid_argument, "trace needs --index or --dfn");
    }
    return 0;
  }
  if (admissible->parsed()) {
    const auto result = dfnrank::is_admissible(order_from(order_name), n);
    std::cout << (result.admissible ? "yes" : "no") << "\n";
    if (result.witness) {
      std::cout << "witness: " << dfnrank::to_text(result.witness->first)
                << " <=2 " << dfnrank::to_text(result.witness->second)
                << " but the order puts them the other way around\n";
    }
    return 0;
  }
  if (verify->parsed()) {
    const auto report =
        dfnrank::cross_check(order_from(order_name), ChainParams(n, m));
    if (as_json) {
      json j;
      j["order"] = report.order;
      j["n"] = report.n;
      j["m"] = report.m;
      j["checked"] = report.checked;
      j["mismatches"] = json::array();
      for (const auto& mm : report.mismatches) {
        j["mismatches"].push_back({{"kind", mm.kind},
                                   {"index", dfnrank::to_decimal(mm.index)},
                                   {"expected", mm.expected},
                                   {"actual", mm.actual}});
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << report.summary() << "\n";
    }
    return report.ok() ? 0 : 1;
  }
  if (lift->parsed()) {
    const ChainParams params(n, m);
    const auto f = dfnrank::find_index_function(impl_name);
    if (!f) {
      throw Error(Errc::invalid_argument,
                  "unknown index function '" + impl_name + "'");
    }
    const Dfn result =
        dfnrank::lift_binary(order_from(order_name), params, *f,
                             parse_dfn(params, a_text),
                             parse_dfn(params, b_text));
    print_dfn(result, as_json);
    return 0;
  }
  if (bench->parsed()) {
    dfnrank::BenchConfig cfg;
    cfg.n = bench_n;
    if (!m_list_text.empty()) cfg.m_list = parse_m_list(m_list_text);
    cfg.trials = trials;
    cfg.order = order_from(order_name);
    cfg.seed = seed;
    const auto samples = dfnrank::run_bench(cfg);
    dfnrank::emit_csv(samples, csv_path);
    if (!svg_path.empty()) dfnrank::emit_svg(samples, svg_path);
    for (auto op : {dfnrank::BenchOp::unrank, dfnrank::BenchOp::rank}) {
      const auto fit = dfnrank::fit_loglog(samples, op);
      std::cout << dfnrank::to_string(op) << " log-log slope "
                << fit.slope << "\n";
    }
    std::cout << "wrote " << csv_path << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error (" << dfnrank::errc_name(e.code()) << "): "
              << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
