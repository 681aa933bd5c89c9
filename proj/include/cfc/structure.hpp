#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

struct BlockCutTree {
  // Node i < num_blocks is block i; the rest are cut vertices in the order of
  // BlockDecomposition::cut_vertices.
  std::size_t num_blocks = 0;
  std::vector<std::pair<std::size_t, std::size_t>> links;  // (block, cut node)
};

struct BlockDecomposition {
  // Each block is a sorted list of edge ids; blocks ordered by smallest edge.
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<VertexId> cut_vertices;
  BlockCutTree tree;
};

enum class ComponentKind { kOrder2, kCutPath, kOtherTree };

const char* to_string(ComponentKind kind);

// One component of C(G), the subgraph formed by the cut-edges.
struct CutComponent {
  std::vector<VertexId> vertices;  // insertion order, or path order if a path
  std::vector<EdgeId> edges;       // path order if a path
  ComponentKind kind = ComponentKind::kOtherTree;
  bool is_path = false;            // the component itself is a path
  std::size_t length = 0;          // number of edges
  std::optional<int> cfc;          // filled by classify_cut_components
};

struct CutStructure {
  std::vector<EdgeId> bridges;
  std::vector<CutComponent> components;
  std::size_t p = 0;  // longest ORDER2 / CUT_PATH component
  std::optional<int> h;

  bool all_cut_paths() const;
  // Components whose cfc equals h.
  std::size_t count_attaining_h() const;
};

// Cut-edges in edge insertion order. Throws PreconditionError if g is
// disconnected.
std::vector<EdgeId> find_bridges(const Graph& g);

// Requires g connected with n >= 2.
BlockDecomposition block_decomposition(const Graph& g);
std::vector<VertexId> block_vertices(const Graph& g, const std::vector<EdgeId>& block);

// Connected, n >= 2, no bridge. K_2 is therefore not 2-edge-connected.
bool is_two_edge_connected(const Graph& g);
// Connected, n >= 3, no cut vertex.
bool is_two_connected(const Graph& g);
bool is_claw_free(const Graph& g);

// cfc of a path with `edges` edges: ceil(log2(edges + 1)).
int path_cfc(std::size_t edges);

// Bridges and the components of C(G) with kinds and p, cfc left empty.
CutStructure collect_cut_components(const Graph& g);

// Same as collect_cut_components, plus the cfc of each component and h.
// Path components use the path formula, stars K_{1,r} give r, any other tree
// goes to the oracle; ScaleLimitError if that tree is too large.
CutStructure classify_cut_components(const Graph& g, const Limits& limits = {});

// One edge from every nontrivial block, pairwise vertex-disjoint.
std::vector<EdgeId> nontrivial_block_matching(const Graph& g);

// A simple u-v path (vertex sequence) whose edges include e. g must be
// 2-connected.
std::vector<VertexId> path_through_edge(const Graph& g, VertexId u, VertexId v, EdgeId e,
                                        const Limits& limits = {});

}  // namespace cfc
