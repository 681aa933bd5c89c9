#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

// A conflict-free path for one unordered vertex pair.
struct PairWitness {
  VertexId from = 0;
  VertexId to = 0;
  std::vector<VertexId> path;
  Color unique_color = 0;
};

// One entry per unordered pair of distinct vertices, pairs in insertion order.
struct CfcWitness {
  std::vector<PairWitness> pairs;
};

struct VerifyResult {
  std::optional<CfcWitness> witness;
  // First pair (by vertex insertion order) with no conflict-free path.
  std::optional<std::pair<VertexId, VertexId>> failing_pair;

  bool ok() const { return witness.has_value(); }
};

// True iff some color occurs exactly once on the path's edges. Throws
// PreconditionError if two consecutive vertices are not adjacent or the
// path repeats a vertex.
bool is_conflict_free_path(const Graph& g, std::span<const VertexId> path,
                           const EdgeColoring& c);

// Color used exactly once on the path, or 0 when there is none.
Color unique_color_on_path(const Graph& g, std::span<const VertexId> path,
                           const EdgeColoring& c);

// Depth-first search over simple u-v paths. Path existence under this
// predicate is not monotone, so there is no shortest-path shortcut.
std::optional<std::vector<VertexId>> exists_conflict_free_path(
    const Graph& g, const EdgeColoring& c, VertexId u, VertexId v,
    const Limits& limits = {});

VerifyResult verify_cfc(const Graph& g, const EdgeColoring& c, const Limits& limits = {});

}  // namespace cfc
