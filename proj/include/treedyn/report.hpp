#pragma once

#include <json.hpp>

#include "treedyn/io.hpp"
#include "treedyn/sweep.hpp"
#include "treedyn/synthesis.hpp"

namespace treedyn {

/// Full analysis of a parsed pattern: ambient/hull shapes, snowflake chain
/// or refusal, forcing numbers, Markov oracle results. cutoff <= 0 selects
/// the default 2N.
nlohmann::ordered_json analyzeReport(const PatternFileData& data, long cutoff,
                                     double tol, long budget);

/// L(X), ap-numbers, and (when edge_count > 0) zero-entropy admissible
/// periods up to the bound.
nlohmann::ordered_json thresholdsReport(int end_count, int edge_count,
                                        long bound);

nlohmann::ordered_json sweepReport(const SweepResult& res);

/// Verification record of a synthesized map.
nlohmann::ordered_json synthReport(const SynthesizedMap& s, long cutoff,
                                   double tol, long budget);

}  // namespace treedyn
