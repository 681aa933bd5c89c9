#pragma once

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

struct OracleResult {
  int value = 0;
  // First coloring in restricted-growth order that uses `value` colors and
  // passes verify_cfc.
  EdgeColoring certificate;
};

// Exact cfc by exhaustive search. For t = 1, 2, ... enumerates colorings in
// restricted-growth form (edge 0 gets color 1, every later edge at most one
// more than the largest color so far) and returns the first that makes g
// conflict-free connected.
//
// Default mode evaluates each vertex pair as soon as every edge on every
// simple path between them is colored, and cuts the branch on failure.
// Limits::naive_oracle switches to full enumeration checked by verify_cfc.
//
// Throws ScaleLimitError above limits.oracle_max_edges edges or when t would
// exceed limits.oracle_max_colors; InternalError if t passes n-1.
OracleResult cfc_oracle(const Graph& g, const Limits& limits = {});

}  // namespace cfc
