#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

// L^depth(source) together with where each vertex came from.
struct LabeledLineGraph {
  Graph graph;
  std::size_t depth = 0;
  // provenance[v] holds the endpoint labels, in the previous iterate
  // L^{depth-1}, of the edge that became vertex v. Empty when depth == 0:
  // every vertex is then its own source.
  std::vector<std::pair<std::string, std::string>> provenance;
};

// Vertices are labelled edge_key(source edge) in source edge order.
LabeledLineGraph line_graph(const Graph& g);

// Number of edges L(g) would have: sum over v of C(deg v, 2).
std::size_t line_graph_size(const Graph& g);

// Applies L k times. Throws ScaleLimitError, naming the iteration, when an
// iterate would have more than edge_cap edges.
LabeledLineGraph iterated_line_graph(const Graph& g, std::size_t k,
                                     std::size_t edge_cap = Limits{}.edge_cap);

// g is K_{1,r} (r >= 1) or K_3; equivalently L(g) is complete.
bool is_star_or_triangle(const Graph& g);

}  // namespace cfc
