#include "treedyn/report.hpp"

#include <sstream>

#include "treedyn/forcing.hpp"
#include "treedyn/plmap.hpp"
#include "treedyn/snowflake.hpp"

namespace treedyn {

namespace {

using nlohmann::ordered_json;

ordered_json shapeJson(const Tree& t) {
  auto s = t.reduce();
  return {{"nodes", t.nodeCount()},
          {"end", s.end_count},
          {"edg", s.edge_count},
          {"degenerate", s.degenerate}};
}

std::string rationalStr(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

ordered_json pointJson(const PLTreeMap& m, const MapPoint& p) {
  if (p.isNode())
    return {{"type", "node"},
            {"node", p.node},
            {"label", m.domain.label(p.node)}};
  auto [a, b] = m.domain.edges()[p.edge];
  return {{"type", "edge"},
          {"edge", p.edge},
          {"endpoints", {a, b}},
          {"coord", rationalStr(p.coord)}};
}

ordered_json oracleJson(const PLTreeMap& m, long cutoff, double tol,
                        long budget) {
  auto spectral = spectralRadius(transitionMatrix(m), tol);
  auto en = enumeratePeriods(m, cutoff, budget);
  ordered_json witnesses = ordered_json::object();
  for (auto& [p, w] : en.witnesses)
    witnesses[std::to_string(p)] = pointJson(m, w.point);
  return {{"radius", spectral.radius},
          {"radius_at_most_one", spectral.at_most_one},
          {"cutoff", cutoff},
          {"periods", en.periods.finite},
          {"witnesses", witnesses},
          {"budget_exceeded", en.budget_exceeded}};
}

}  // namespace

ordered_json analyzeReport(const PatternFileData& data, long cutoff,
                           double tol, long budget) {
  Pattern p = Pattern::validate(data.tree, data.orbit);
  long n = p.period();
  if (cutoff <= 0) cutoff = 2 * n;

  ordered_json rep;
  rep["pattern"] = {{"period", n},
                    {"ambient", shapeJson(data.tree)},
                    {"hull", shapeJson(p.tree())}};

  auto chain = decompose(p);
  ordered_json snow;
  snow["is_snowflake"] = static_cast<bool>(chain);
  if (chain) {
    snow["chain"] = chain->levels;
    snow["chain_count"] = countChains(p);
  } else {
    // refusal witness: every first-level divisor and its validity
    ordered_json refusal = ordered_json::array();
    for (int m = 2; m <= n; ++m)
      if (n % m == 0)
        refusal.push_back({{"divisor", m}, {"valid", levelValid(p, 1, m)}});
    snow["first_level_refusal"] = refusal;
  }
  rep["snowflake"] = snow;

  auto ambient_shape = data.tree.reduce();
  if (ambient_shape.end_count >= 2) {
    int e = ambient_shape.end_count;
    bool ap = isApNumber(n, e);
    ordered_json forcing;
    forcing["end"] = e;
    forcing["edg"] = ambient_shape.edge_count;
    forcing["ap_number"] = ap;
    forcing["forced_period_threshold"] =
        ap ? ordered_json(forcedPeriodThreshold(n, e)) : ordered_json();
    forcing["entropy_lower_bound"] =
        ap ? ordered_json(entropyLowerBound(n, e)) : ordered_json();
    auto best = bestEntropyBound(n, e);
    forcing["best_entropy_bound"] = best ? ordered_json(*best) : ordered_json();
    forcing["misiurewicz_threshold"] = misiurewiczThreshold(e);
    forcing["zero_entropy_admissible"] =
        zeroEntropyAdmissible(n, e, ambient_shape.edge_count);
    rep["forcing"] = forcing;
  } else {
    rep["forcing"] = nullptr;
  }

  rep["oracle"] = oracleJson(connectTheDots(p), cutoff, tol, budget);

  if (chain) {
    auto s = synthSnowflakeMap(p);
    rep["synthesis"] = synthReport(s, cutoff, tol, budget);
  } else {
    rep["synthesis"] = nullptr;
  }
  return rep;
}

ordered_json thresholdsReport(int end_count, int edge_count, long bound) {
  ordered_json rep;
  rep["end"] = end_count;
  rep["misiurewicz_threshold"] = misiurewiczThreshold(end_count);
  std::vector<long> aps;
  for (long m = 2; m <= bound; ++m)
    if (isApNumber(m, end_count)) aps.push_back(m);
  rep["ap_numbers"] = aps;
  if (edge_count > 0) {
    rep["edg"] = edge_count;
    std::vector<long> adm;
    for (long m = 1; m <= bound; ++m)
      if (zeroEntropyAdmissible(m, end_count, edge_count)) adm.push_back(m);
    rep["admissible_periods"] = adm;
  } else {
    rep["edg"] = nullptr;
    rep["admissible_periods"] = nullptr;
  }
  return rep;
}

ordered_json sweepReport(const SweepResult& res) {
  ordered_json by_period = ordered_json::object();
  for (auto& [n, c] : res.by_period) by_period[std::to_string(n)] = c;
  return {{"corpus_size", res.corpus_size},
          {"snowflakes", res.snowflakes},
          {"non_snowflakes", res.non_snowflakes},
          {"multi_chain", res.multi_chain},
          {"by_period", by_period},
          {"counterexamples", res.counterexamples},
          {"ok", res.ok()}};
}

ordered_json synthReport(const SynthesizedMap& s, long cutoff, double tol,
                         long budget) {
  auto v = verifySynthesized(s, cutoff, tol, budget);
  return {{"declared", s.declared_description},
          {"declared_entropy_zero", s.declared_entropy_zero},
          {"cutoff", cutoff},
          {"ok", v.ok},
          {"radius_flag_ok", v.radius_flag_ok},
          {"periods_ok", v.periods_ok},
          {"radius", v.radius},
          {"expected_periods", v.expected},
          {"found_periods", v.found},
          {"budget_exceeded", v.budget_exceeded}};
}

}  // namespace treedyn
