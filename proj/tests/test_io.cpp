#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treedyn/io.hpp"
#include "treedyn/report.hpp"

using namespace treedyn;
using nlohmann::ordered_json;

namespace {

const char* kStarFile =
    "# 3-star rotation\n"
    "node c\n"
    "node a\n"
    "node b\n"
    "node d\n"
    "edge c a\n"
    "edge c b\n"
    "edge c d\n"
    "cycle a b d\n";

}  // namespace

TEST_CASE("pattern file round trip") {
  auto data = parsePatternFile(std::string(kStarFile));
  CHECK(data.tree.nodeCount() == 4);
  CHECK(data.orbit.size() == 3);
  CHECK(data.tree.label(data.orbit[0]) == "a");
  CHECK(data.tree.degree(*data.tree.nodeByLabel("c")) == 3);
}

TEST_CASE("ambient section extends the tree") {
  std::string text =
      "node a\nnode b\nedge a b\ncycle a b\n"
      "ambient\nnode x\nedge b x\n";
  auto data = parsePatternFile(text);
  CHECK(data.tree.nodeCount() == 3);
  CHECK(data.orbit.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  auto lineOf = [](const std::string& text) {
    try {
      parsePatternFile(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(lineOf("node a\nedge a z\ncycle a\n") == 2);       // unknown node
  CHECK(lineOf("node a\nnode a\n") == 2);                  // duplicate
  CHECK(lineOf("node a\ncycle a\ncycle a\n") == 3);        // two cycles
  CHECK(lineOf("node a\ncycle\n") == 2);                   // empty cycle
  CHECK(lineOf("node a?\ncycle a\n") == 1);                // bad identifier
  CHECK(lineOf("node a\nfrob a\n") == 2);                  // unknown record
  CHECK(lineOf("node a\nnode b\nedge a b b\ncycle a\n") == 3);  // trailing
  CHECK(lineOf("node a\n") == 1);                          // missing cycle
  CHECK(lineOf("node a\nnode b\ncycle a b\n") == 3);       // disconnected
}

TEST_CASE("comments and blank lines are skipped") {
  CHECK_NOTHROW(parsePatternFile(std::string("# c\n\nnode a\n# x\ncycle a\n")));
}

TEST_CASE("map dump lists nodes, images and edge paths") {
  auto data = parsePatternFile(std::string(kStarFile));
  Pattern p = Pattern::validate(data.tree, data.orbit);
  auto dump = dumpMap(connectTheDots(p));
  CHECK(dump.find("nodes 4") != std::string::npos);
  CHECK(dump.find("path") != std::string::npos);
  // deterministic
  CHECK(dump == dumpMap(connectTheDots(p)));
}

TEST_CASE("text rendering carries the same numbers as JSON") {
  auto rep = thresholdsReport(3, 3, 30);
  std::string text = renderText(rep);
  // every scalar leaf of the JSON document appears verbatim in the text
  for (auto& [key, value] : rep.items()) {
    if (value.is_object()) continue;
    CHECK(text.find(value.dump()) != std::string::npos);
    CHECK(text.find(key) != std::string::npos);
  }
  CHECK(renderText(rep) == text);  // byte-deterministic
}

TEST_CASE("analyze report composition") {
  auto data = parsePatternFile(std::string(kStarFile));
  auto rep = analyzeReport(data, 0, 1e-9, 5'000'000);
  CHECK(rep["pattern"]["period"] == 3);
  CHECK(rep["pattern"]["ambient"]["end"] == 3);
  CHECK(rep["snowflake"]["is_snowflake"] == true);
  CHECK(rep["snowflake"]["chain"] == ordered_json({1, 3}));
  CHECK(rep["forcing"]["misiurewicz_threshold"] == 24);
  CHECK(rep["forcing"]["zero_entropy_admissible"] == true);
  CHECK(rep["oracle"]["periods"] == ordered_json({1, 3}));
  CHECK(rep["oracle"]["budget_exceeded"].empty());
  CHECK(rep["synthesis"]["ok"] == true);
  // deterministic end to end
  CHECK(rep.dump() == analyzeReport(data, 0, 1e-9, 5'000'000).dump());
}
