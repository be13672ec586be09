#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "treedyn/plmap.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

/// Parse failure with a 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

/// A parsed pattern file: the full ambient tree plus the marked orbit in
/// time order. Grammar (line oriented, `#` comments):
///   node <id>
///   edge <id> <id>
///   cycle <id> ... <id>      (exactly once)
///   ambient                  (optional; further nodes/edges are ambient-only)
struct PatternFileData {
  Tree tree;
  std::vector<NodeId> orbit;
};

PatternFileData parsePatternFile(std::istream& in);
PatternFileData parsePatternFile(const std::string& text);

/// Text dump of a synthesized map: nodes with labels and images, then the
/// image path of every edge.
std::string dumpMap(const PLTreeMap& m);

/// Render a JSON report as indented `key: value` text. Numbers are printed
/// through the JSON serializer, so both formats carry identical numeric
/// content by construction.
std::string renderText(const nlohmann::ordered_json& report);

}  // namespace treedyn
