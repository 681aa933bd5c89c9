#include "cfc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cfc/error.hpp"
#include "cfc/oracle.hpp"
#include "cfc/verify.hpp"

namespace cfc {

namespace {

void enforce(const Graph& g, const EdgeColoring& c, const Limits& limits, const char* what) {
  if (g.size() > limits.verify_max_edges) return;
  auto res = verify_cfc(g, c, limits);
  if (!res.ok()) {
    auto [a, b] = *res.failing_pair;
    throw InternalError(std::string(what) + " produced no conflict-free path between '" +
                        g.label(a) + "' and '" + g.label(b) + "'");
  }
}

}  // namespace

std::vector<Color> ruler_sequence(std::size_t m) {
  std::vector<Color> out(m);
  for (std::size_t i = 1; i <= m; ++i) out[i - 1] = std::countr_zero(i) + 1;
  return out;
}

EdgeColoring ruler_path_coloring(const Graph& g) {
  auto order = path_order(g);
  if (!order) throw PreconditionError("ruler_path_coloring: graph is not a path");
  auto seq = ruler_sequence(g.size());
  std::vector<Color> colors(g.size());
  for (std::size_t i = 0; i + 1 < order->size(); ++i) {
    colors[*g.edge_id((*order)[i], (*order)[i + 1])] = seq[i];
  }
  return EdgeColoring(std::move(colors));
}

EdgeColoring two_edge_connected_coloring(const Graph& g, const Limits& limits) {
  if (!is_connected(g)) throw PreconditionError("two_edge_connected_coloring: not connected");
  if (is_complete(g)) throw PreconditionError("two_edge_connected_coloring: graph is complete");
  if (!is_two_edge_connected(g)) {
    throw PreconditionError("two_edge_connected_coloring: graph is not 2-edge-connected");
  }
  std::vector<Color> colors(g.size(), 1);
  for (auto e : nontrivial_block_matching(g)) colors[e] = 2;
  EdgeColoring c(std::move(colors));
  enforce(g, c, limits, "two_edge_connected_coloring");
  return c;
}

EdgeColoring cut_path_coloring(const Graph& g, const Limits& limits) {
  if (!is_connected(g)) throw PreconditionError("cut_path_coloring: not connected");
  auto cs = classify_cut_components(g, limits);
  if (cs.bridges.empty()) throw PreconditionError("cut_path_coloring: graph has no cut-edge");
  if (!cs.all_cut_paths()) {
    throw PreconditionError("cut_path_coloring: a component of C(G) is not a cut-path");
  }

  const int h = *cs.h;
  const bool has_blocks = cs.bridges.size() < g.size();
  const bool unique = cs.count_attaining_h() == 1 && (h >= 2 || !has_blocks);
  const int special = unique ? h : h + 1;

  std::vector<Color> colors(g.size(), 1);
  for (const auto& comp : cs.components) {
    auto seq = ruler_sequence(comp.length);
    for (std::size_t i = 0; i < comp.length; ++i) colors[comp.edges[i]] = seq[i];
  }
  if (has_blocks) {
    for (auto e : nontrivial_block_matching(g)) colors[e] = special;
  }
  EdgeColoring c(std::move(colors));
  enforce(g, c, limits, "cut_path_coloring");
  return c;
}

EdgeColoring rainbow_coloring(const Graph& g) {
  std::vector<Color> colors(g.size());
  std::iota(colors.begin(), colors.end(), 1);
  return EdgeColoring(std::move(colors));
}

EdgeColoring construct_cfc_coloring(const Graph& g, const Limits& limits) {
  if (!is_connected(g)) throw PreconditionError("construct_cfc_coloring: not connected");
  if (g.order() < 2) return EdgeColoring{};
  if (is_complete(g)) return EdgeColoring::uniform(g.size());
  if (is_path(g)) return ruler_path_coloring(g);
  if (is_star(g)) return rainbow_coloring(g);

  auto cs = collect_cut_components(g);
  if (cs.bridges.empty()) return two_edge_connected_coloring(g, limits);
  if (cs.all_cut_paths()) {
    try {
      return cut_path_coloring(g, limits);
    } catch (const InternalError&) {
      // Falls through to the oracle below.
    }
  }
  return cfc_oracle(g, limits).certificate;
}

}  // namespace cfc
