#pragma once

#include <json.hpp>

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"
#include "cfc/line_graph.hpp"
#include "cfc/solver.hpp"
#include "cfc/structure.hpp"
#include "cfc/verify.hpp"

namespace cfc {

using Json = nlohmann::ordered_json;

// {"num_colors": t, "assignment": {"u|v": c, ...}}, keys from edge_key() in
// edge insertion order.
Json coloring_to_json(const Graph& g, const EdgeColoring& c);

// Inverse of coloring_to_json. Throws ColoringInputError listing missing
// edges, keys that are not edges of g, or out-of-range colors.
EdgeColoring coloring_from_json(const Graph& g, const Json& j);

Json cut_structure_to_json(const Graph& g, const CutStructure& cs);
Json blocks_to_json(const Graph& g, const BlockDecomposition& bd);
Json result_to_json(const Graph& g, const CfcResult& r);
Json provenance_to_json(const LabeledLineGraph& lg);

}  // namespace cfc
