#include "cfc/json_io.hpp"

#include <unordered_map>

#include "cfc/error.hpp"

namespace cfc {

namespace {

Json labels(const Graph& g, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

Json edge_keys(const Graph& g, std::span<const EdgeId> es) {
  Json out = Json::array();
  for (auto e : es) out.push_back(edge_key(g, g.edge(e)));
  return out;
}

}  // namespace

Json coloring_to_json(const Graph& g, const EdgeColoring& c) {
  Json assignment = Json::object();
  for (EdgeId e = 0; e < g.size(); ++e) assignment[edge_key(g, g.edge(e))] = c[e];
  return Json{{"num_colors", c.num_colors()}, {"assignment", std::move(assignment)}};
}

EdgeColoring coloring_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("assignment") || !j["assignment"].is_object()) {
    throw ColoringInputError("coloring JSON needs an \"assignment\" object");
  }
  std::unordered_map<std::string, EdgeId> by_key;
  for (EdgeId e = 0; e < g.size(); ++e) by_key.emplace(edge_key(g, g.edge(e)), e);

  std::vector<Color> colors(g.size(), 0);
  std::vector<char> mentioned(g.size(), 0);
  std::string alien, bad;
  for (const auto& [key, value] : j["assignment"].items()) {
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      alien += (alien.empty() ? "" : ", ") + key;
      continue;
    }
    mentioned[it->second] = 1;
    if (!value.is_number_integer() || value.get<long long>() < 1) {
      bad += (bad.empty() ? "" : ", ") + key;
      continue;
    }
    colors[it->second] = value.get<Color>();
  }
  std::string missing;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!mentioned[e]) {
      missing += (missing.empty() ? "" : ", ") + edge_key(g, g.edge(e));
    }
  }
  std::string msg;
  if (!alien.empty()) msg += "edges not in graph: " + alien + "; ";
  if (!missing.empty()) msg += "uncolored edges: " + missing + "; ";
  if (!bad.empty()) msg += "colors must be positive integers: " + bad + "; ";
  if (!msg.empty()) throw ColoringInputError(msg.substr(0, msg.size() - 2));

  EdgeColoring c(std::move(colors));
  if (j.contains("num_colors")) {
    const auto& t = j["num_colors"];
    if (!t.is_number_integer() || t.get<int>() != c.num_colors()) {
      throw ColoringInputError("num_colors does not match the largest color used (" +
                               std::to_string(c.num_colors()) + ")");
    }
  }
  return c;
}

Json cut_structure_to_json(const Graph& g, const CutStructure& cs) {
  Json comps = Json::array();
  for (const auto& c : cs.components) {
    Json jc{{"kind", to_string(c.kind)},
            {"length", c.length},
            {"vertices", labels(g, c.vertices)},
            {"edges", edge_keys(g, c.edges)}};
    if (c.cfc) jc["cfc"] = *c.cfc;
    comps.push_back(std::move(jc));
  }
  Json out{{"bridges", edge_keys(g, cs.bridges)}, {"components", std::move(comps)}, {"p", cs.p}};
  if (cs.h) out["h"] = *cs.h;
  return out;
}

Json blocks_to_json(const Graph& g, const BlockDecomposition& bd) {
  Json blocks = Json::array();
  for (const auto& b : bd.blocks) blocks.push_back(edge_keys(g, b));
  return Json{{"blocks", std::move(blocks)}, {"cut_vertices", labels(g, bd.cut_vertices)}};
}

Json result_to_json(const Graph& g, const CfcResult& r) {
  Json out;
  if (r.exact()) {
    out["kind"] = "exact";
    out["value"] = r.value;
  } else {
    out["kind"] = "bound";
    out["lo"] = r.value;
    out["hi"] = r.hi;
  }
  out["method"] = to_string(r.method);
  if (r.certificate) out["certificate"] = coloring_to_json(g, *r.certificate);
  return out;
}

Json provenance_to_json(const LabeledLineGraph& lg) {
  Json map = Json::object();
  for (VertexId v = 0; v < lg.provenance.size(); ++v) {
    map[lg.graph.label(v)] = Json::array({lg.provenance[v].first, lg.provenance[v].second});
  }
  return Json{{"schema", 1}, {"k", lg.depth}, {"provenance", std::move(map)}};
}

}  // namespace cfc
