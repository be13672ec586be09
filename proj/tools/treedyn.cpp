// treedyn: combinatorial dynamics of tree maps — analyze pattern files,
// print forcing thresholds, run the exhaustive sweep, synthesize maps.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treedyn/io.hpp"
#include "treedyn/report.hpp"
#include "treedyn/sweep.hpp"
#include "treedyn/synthesis.hpp"

using nlohmann::ordered_json;
using namespace treedyn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;      // verification counterexample
constexpr int kExitParse = 2;     // bad input file or limits
constexpr int kExitBudget = 3;    // loop budget exceeded
constexpr int kExitPrecond = 4;   // synthesis precondition failed

void emit(const ordered_json& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << renderText(rep);
}

Tree makeStar(int k) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({0, i});
  return Tree(k + 1, std::move(edges));
}

Tree makePath(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Tree(n, std::move(edges));
}

PatternFileData parseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parsePatternFile(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial dynamics of continuous tree maps"};
  app.require_subcommand(1);

  std::string format = "text", file, out_file, kind;
  long cutoff = 0, budget = 5'000'000, bound = 64;
  double tol = 1e-9;
  int max_period = 6, max_endpoints = 3;
  int end_count = 2, edge_count = 0;
  int star = 0, interval = 0, n_spikes = 1, m_spikes = 1, doublings = 0;
  long key = 1;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cutoff", cutoff, "period cutoff (0 = default 2N)");
    cmd->add_option("--tol", tol, "numerical tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget, "loop-search step budget per period")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "analyze a pattern file");
  analyze->add_option("file", file, "pattern file")->required();
  addCommon(analyze);

  auto* thresholds =
      app.add_subcommand("thresholds", "forcing thresholds for a tree shape");
  thresholds->add_option("--end", end_count, "endpoint count")
      ->required()
      ->check(CLI::Range(2, 1000));
  thresholds->add_option("--edg", edge_count, "reduced edge count");
  thresholds->add_option("--bound", bound, "list periods up to this bound");
  addCommon(thresholds);

  auto* sweep = app.add_subcommand("sweep", "exhaustive pattern corpus check");
  sweep->add_option("--max-period", max_period, "largest orbit period");
  sweep->add_option("--max-endpoints", max_endpoints, "largest endpoint count");
  addCommon(sweep);

  auto* synth = app.add_subcommand("synth", "construct and verify a map");
  synth->add_option("kind", kind, "snowflake | period-set | prop3")
      ->required()
      ->check(CLI::IsMember({"snowflake", "period-set", "prop3"}));
  synth->add_option("--file", file, "pattern file (snowflake kind)");
  synth->add_option("--star", star, "ambient k-star");
  synth->add_option("--interval", interval, "ambient path on k nodes");
  synth->add_option("--n", n_spikes, "endpoint count n (period-set kind)");
  synth->add_option("--key", key, "Sharkovskii key (period-set kind)");
  synth->add_option("--m", m_spikes, "spike count m (prop3 kind)");
  synth->add_option("--k", doublings, "doublings k (prop3 kind)");
  synth->add_option("--out", out_file, "write the map dump to this file");
  addCommon(synth);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      auto rep = analyzeReport(parseFile(file), cutoff, tol, budget);
      emit(rep, format);
      bool over = !rep["oracle"]["budget_exceeded"].empty();
      return over ? kExitBudget : kExitOk;
    }

    if (*thresholds) {
      emit(thresholdsReport(end_count, edge_count, bound), format);
      return kExitOk;
    }

    if (*sweep) {
      if (max_period > 8 || max_endpoints > 4 || max_period < 1 ||
          max_endpoints < 2) {
        std::cerr << "sweep limits out of range (period <= 8, endpoints <= 4)"
                  << "\n";
        return kExitParse;
      }
      SweepOptions opt;
      opt.max_period = max_period;
      opt.max_endpoints = max_endpoints;
      opt.tol = tol;
      opt.budget = budget;
      auto res = runSweep(opt);
      emit(sweepReport(res), format);
      return res.ok() ? kExitOk : kExitFail;
    }

    if (*synth) {
      auto build = [&]() -> SynthesizedMap {
        if (kind == "snowflake") {
          if (file.empty()) throw ParseError(0, "snowflake kind needs --file");
          auto data = parseFile(file);
          return synthSnowflakeMap(data.tree, data.orbit);
        }
        Tree ambient = star > 0 ? makeStar(star)
                                : makePath(interval > 0 ? interval : 2);
        if (kind == "period-set")
          return synthPeriodSet(ambient, n_spikes,
                                SharkovskiiKey::finite(key));
        return synthProp3(ambient, m_spikes, doublings).map;
      };
      SynthesizedMap s = build();
      long cut = cutoff > 0 ? cutoff : 2 * static_cast<long>(
                                               s.map.domain.nodeCount());
      auto rep = synthReport(s, cut, tol, budget);
      emit(rep, format);
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << dumpMap(s.map);
      }
      if (!rep["budget_exceeded"].empty()) return kExitBudget;
      return rep["ok"].get<bool>() ? kExitOk : kExitFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PatternError& e) {
    std::cerr << "invalid pattern: " << e.what() << "\n";
    return kExitParse;
  } catch (const TreeError& e) {
    std::cerr << "invalid tree: " << e.what() << "\n";
    return kExitParse;
  } catch (const SynthesisError& e) {
    std::cerr << "synthesis precondition: " << e.what() << "\n";
    return kExitPrecond;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}
