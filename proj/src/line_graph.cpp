#include "cfc/line_graph.hpp"

#include "cfc/error.hpp"

namespace cfc {

LabeledLineGraph line_graph(const Graph& g) {
  GraphBuilder b;
  LabeledLineGraph out;
  out.depth = 1;
  out.provenance.reserve(g.size());
  for (const Edge& e : g.edges()) {
    b.add_vertex(edge_key(g, e));
    out.provenance.emplace_back(g.label(e.u), g.label(e.v));
  }
  // Source edge ids coincide with line-graph vertex ids.
  for (VertexId v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) b.add_edge(inc[i], inc[j]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

std::size_t line_graph_size(const Graph& g) {
  std::size_t total = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    auto d = g.degree(v);
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

LabeledLineGraph iterated_line_graph(const Graph& g, std::size_t k, std::size_t edge_cap) {
  LabeledLineGraph cur{g, 0, {}};
  for (std::size_t i = 1; i <= k; ++i) {
    auto next_size = line_graph_size(cur.graph);
    if (next_size > edge_cap) {
      throw ScaleLimitError("L^" + std::to_string(i) + " would have " +
                            std::to_string(next_size) + " edges (cap " +
                            std::to_string(edge_cap) + "); reached L^" +
                            std::to_string(i - 1));
    }
    cur = line_graph(cur.graph);
    cur.depth = i;
  }
  return cur;
}

bool is_star_or_triangle(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("is_star_or_triangle: graph is not connected");
  if (g.order() == 3 && g.size() == 3) return true;
  return is_star(g);
}

}  // namespace cfc
