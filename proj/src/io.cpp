#include "treedyn/io.hpp"

#include <map>
#include <sstream>

namespace treedyn {

namespace {

bool validId(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

PatternFileData parsePatternFile(std::istream& in) {
  std::map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> orbit;
  bool have_cycle = false;

  auto lookup = [&](const std::string& id, int line) {
    auto it = ids.find(id);
    if (it == ids.end()) throw ParseError(line, "unknown node '" + id + "'");
    return it->second;
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "node") {
      std::string id;
      if (!(ls >> id) || !validId(id))
        throw ParseError(line, "expected 'node <id>'");
      if (ids.count(id)) throw ParseError(line, "duplicate node '" + id + "'");
      ids[id] = static_cast<NodeId>(labels.size());
      labels.push_back(id);
    } else if (word == "edge") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError(line, "expected 'edge <id> <id>'");
      edges.push_back({lookup(a, line), lookup(b, line)});
    } else if (word == "cycle") {
      if (have_cycle) throw ParseError(line, "more than one cycle line");
      have_cycle = true;
      std::string id;
      while (ls >> id) orbit.push_back(lookup(id, line));
      if (orbit.empty()) throw ParseError(line, "empty cycle");
    } else if (word == "ambient") {
      // section marker only; ambient nodes/edges use the same records
      std::string rest;
      if (ls >> rest) throw ParseError(line, "'ambient' takes no arguments");
    } else {
      throw ParseError(line, "unknown record '" + word + "'");
    }
    std::string extra;
    if (word != "cycle" && ls >> extra)
      throw ParseError(line, "trailing tokens after '" + word + "'");
  }
  if (!have_cycle) throw ParseError(line, "missing cycle line");
  int node_count = static_cast<int>(labels.size());
  try {
    return {Tree(node_count, std::move(edges), std::move(labels)),
            std::move(orbit)};
  } catch (const TreeError& e) {
    throw ParseError(line, e.what());
  }
}

PatternFileData parsePatternFile(const std::string& text) {
  std::istringstream in(text);
  return parsePatternFile(in);
}

std::string dumpMap(const PLTreeMap& m) {
  std::ostringstream os;
  os << "nodes " << m.domain.nodeCount() << "\n";
  for (NodeId v = 0; v < m.domain.nodeCount(); ++v)
    os << "node " << v << " " << m.domain.label(v) << " -> "
       << m.node_image[v] << "\n";
  auto& edges = m.domain.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    os << "edge " << edges[e].first << " " << edges[e].second << " path";
    for (NodeId v : m.edge_path[e]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

namespace {

void renderNode(const nlohmann::ordered_json& j, const std::string& key,
                int depth, std::ostringstream& os) {
  std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto& [k, v] : j.items())
      renderNode(v, k, key.empty() ? depth : depth + 1, os);
  } else {
    os << pad << key << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string renderText(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  renderNode(report, "", 0, os);
  return os.str();
}

}  // namespace treedyn
