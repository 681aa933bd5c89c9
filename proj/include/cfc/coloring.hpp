#pragma once

#include <vector>

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"
#include "cfc/structure.hpp"

namespace cfc {

// Ruler sequence of length m: position i (1-based) gets nu_2(i) + 1, where
// nu_2 is the 2-adic valuation. Every contiguous window has a unique
// maximum, and the sequence uses ceil(log2(m + 1)) colors.
std::vector<Color> ruler_sequence(std::size_t m);

// Ruler coloring along a path graph, from the end with the smaller id.
// Throws PreconditionError if g is not a path.
EdgeColoring ruler_path_coloring(const Graph& g);

// Noncomplete 2-edge-connected g: one edge per block (a matching) gets
// color 2, all others color 1.
EdgeColoring two_edge_connected_coloring(const Graph& g, const Limits& limits = {});

// g with at least one bridge and every component of C(G) an ORDER2 or
// CUT_PATH component. Uses h colors when one component alone attains h
// (ruler colors on that component, matching edges of nontrivial blocks take
// h), and h + 1 otherwise (matching edges take h + 1). Blocks otherwise get
// color 1. Verified when g fits limits.verify_max_edges; InternalError naming
// the failing pair if verification fails.
EdgeColoring cut_path_coloring(const Graph& g, const Limits& limits = {});

// Every edge its own color; optimal for stars.
EdgeColoring rainbow_coloring(const Graph& g);

// Dispatches to the constructions above, or the oracle when none applies.
// The number of colors equals cfc_exact(g) whenever that is exact.
EdgeColoring construct_cfc_coloring(const Graph& g, const Limits& limits = {});

}  // namespace cfc
