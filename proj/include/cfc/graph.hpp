#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cfc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Unordered vertex pair. Stored with u < v so that {u,v} and {v,u} compare
// and hash identically.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with opaque string labels. Vertices and edges keep
// insertion order, which every algorithm in the library iterates in.
// Immutable once built; use GraphBuilder to construct one.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  // Edge ids incident to v, parallel to neighbors(v).
  std::span<const EdgeId> incident(VertexId v) const { return inc_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;

  // Set equality on labels and labelled edges; insertion order is ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  static std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

class GraphBuilder {
 public:
  // Returns the id of an existing vertex with this label, or adds it.
  VertexId add_vertex(std::string_view label);
  // Adds {a,b}; duplicates collapse. Throws PreconditionError on a loop.
  EdgeId add_edge(VertexId a, VertexId b);
  EdgeId add_edge(std::string_view a, std::string_view b);

  std::size_t order() const { return g_.order(); }
  Graph build() &&;
  Graph build() const&;

 private:
  Graph g_;
};

// Canonical rendering of an edge: endpoint labels sorted, joined by '|'.
// Labels that already contain '|' are parenthesised so keys nest.
std::string edge_key(const Graph& g, const Edge& e);
std::string edge_key(std::string_view a, std::string_view b);

// Parses either the edge-list format ("u v" per line, '#' comments) or the
// DOT subset ("graph { a -- b; c; }"), chosen by the leading keyword.
Graph parse_graph(std::string_view text);
Graph parse_edge_list(std::string_view text);
Graph parse_dot(std::string_view text);

// Edge list when every vertex has an edge, DOT otherwise; always parses back.
std::string render_graph(const Graph& g);
std::string render_edge_list(const Graph& g);
std::string render_dot(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels);
// Subgraph formed by the given edges and their endpoints.
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

// Vertex sequence of g if g is a path (n >= 2), starting at the end with the
// smaller id; nullopt otherwise.
std::optional<std::vector<VertexId>> path_order(const Graph& g);
bool is_path(const Graph& g);
// K_{1,r}, r >= 1.
bool is_star(const Graph& g);

}  // namespace cfc

template <>
struct std::hash<cfc::Edge> {
  std::size_t operator()(const cfc::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
  }
};
