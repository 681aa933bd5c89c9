#include "cfc/solver.hpp"

#include <algorithm>
#include <functional>

#include "cfc/coloring.hpp"
#include "cfc/error.hpp"
#include "cfc/line_graph.hpp"
#include "cfc/oracle.hpp"

namespace cfc {

namespace {

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
}

std::optional<EdgeColoring> maybe(const SolveOptions& opts,
                                  const std::function<EdgeColoring()>& build) {
  if (!opts.with_certificate) return std::nullopt;
  return build();
}

CfcResult from_oracle(const Graph& g, const Limits& limits) {
  auto r = cfc_oracle(g, limits);
  return CfcResult::make_exact(r.value, CfcMethod::kOracle, std::move(r.certificate));
}

// A tree component of C(G) with a vertex of degree >= 3 forces three bridges
// v-x1, v-x2, v-x3 whose far ends are joined only by the 2-edge paths
// x_i v x_j, so those three edges need pairwise distinct colors.
bool has_branching_cut_component(const CutStructure& cs) {
  return std::any_of(cs.components.begin(), cs.components.end(),
                     [](const CutComponent& c) { return !c.is_path; });
}

// cfc of the iterate with surviving cut-path lengths, or 2 when none survive.
CfcResult value_from_lengths(const std::vector<std::size_t>& lengths, std::size_t k) {
  int h = 0;
  std::size_t attaining = 0;
  for (auto len : lengths) {
    if (len + 1 <= k) continue;
    int c = path_cfc(len + 1 - k);
    if (c > h) {
      h = c;
      attaining = 1;
    } else if (c == h) {
      ++attaining;
    }
  }
  if (h == 0) return CfcResult::make_exact(2, CfcMethod::kTwoEdgeConnected);
  if (h == 1) return CfcResult::make_exact(2, CfcMethod::kOrder2Components);
  if (attaining == 1) return CfcResult::make_exact(h, CfcMethod::kCutPathUnique);
  return CfcResult::make_exact(h + 1, CfcMethod::kCutPathMulti);
}

// Whether cfc(g) == 2, using the branching lower bound before any search.
bool cfc_is_two(const Graph& g, const SolveOptions& opts) {
  if (g.order() < 3 || is_complete(g)) return false;
  if (has_branching_cut_component(collect_cut_components(g))) return false;
  SolveOptions quiet = opts;
  quiet.with_certificate = false;
  auto r = cfc_exact(g, quiet);
  if (r.exact()) return r.value == 2;
  if (r.value >= 3) return false;
  throw ScaleLimitError("cannot decide whether cfc = 2: bounds [" + std::to_string(r.value) +
                        ", " + std::to_string(r.hi) + "]");
}

}  // namespace

const char* to_string(CfcMethod m) {
  switch (m) {
    case CfcMethod::kComplete: return "COMPLETE";
    case CfcMethod::kTwoEdgeConnected: return "TWO_EDGE_CONNECTED";
    case CfcMethod::kCutPathUnique: return "CUT_PATH_UNIQUE";
    case CfcMethod::kCutPathMulti: return "CUT_PATH_MULTI";
    case CfcMethod::kOrder2Components: return "ORDER2_COMPONENTS";
    case CfcMethod::kPathFormula: return "PATH_FORMULA";
    case CfcMethod::kStarFormula: return "STAR_FORMULA";
    case CfcMethod::kOracle: return "ORACLE";
    case CfcMethod::kHBound: return "H_BOUND";
  }
  return "?";
}

CfcResult cfc_exact(const Graph& g, const SolveOptions& opts) {
  require_connected(g, "cfc_exact");
  const auto& limits = opts.limits;
  if (opts.mode == SolveMode::kOracle) return from_oracle(g, limits);

  const auto n = g.order();
  if (n <= 1) return CfcResult::make_exact(0, CfcMethod::kComplete, EdgeColoring{});
  if (is_complete(g)) {
    return CfcResult::make_exact(1, CfcMethod::kComplete,
                                 maybe(opts, [&] { return EdgeColoring::uniform(g.size()); }));
  }
  if (is_path(g)) {
    return CfcResult::make_exact(path_cfc(g.size()), CfcMethod::kPathFormula,
                                 maybe(opts, [&] { return ruler_path_coloring(g); }));
  }
  if (is_star(g)) {
    return CfcResult::make_exact(static_cast<int>(n - 1), CfcMethod::kStarFormula,
                                 maybe(opts, [&] { return rainbow_coloring(g); }));
  }

  auto cs = collect_cut_components(g);
  if (cs.bridges.empty()) {
    return CfcResult::make_exact(2, CfcMethod::kTwoEdgeConnected, maybe(opts, [&] {
                                   return two_edge_connected_coloring(g, limits);
                                 }));
  }
  if (cs.all_cut_paths()) {
    int h = 0;
    std::size_t attaining = 0;
    for (const auto& c : cs.components) {
      int v = path_cfc(c.length);
      if (v > h) {
        h = v;
        attaining = 1;
      } else if (v == h) {
        ++attaining;
      }
    }
    auto cert = maybe(opts, [&] { return cut_path_coloring(g, limits); });
    if (h == 1) return CfcResult::make_exact(2, CfcMethod::kOrder2Components, std::move(cert));
    if (attaining == 1) {
      return CfcResult::make_exact(h, CfcMethod::kCutPathUnique, std::move(cert));
    }
    return CfcResult::make_exact(h + 1, CfcMethod::kCutPathMulti, std::move(cert));
  }

  if (opts.mode == SolveMode::kFormula) {
    throw MethodRefusedError("no closed form applies: C(G) has a component that is not a cut-path");
  }
  if (g.size() <= limits.oracle_max_edges) {
    try {
      return from_oracle(g, limits);
    } catch (const ScaleLimitError&) {
      // Color limit hit; fall back to the bound.
    }
  }
  return CfcResult::make_bound(h_value(g, limits));
}

int h_value(const Graph& g, const Limits& limits) {
  require_connected(g, "h_value");
  return *classify_cut_components(g, limits).h;
}

bool in_cut_edge_family(const Graph& g) {
  return is_connected(g) && g.order() >= 4 && !is_path(g) && !is_star(g) &&
         !find_bridges(g).empty();
}

std::vector<std::size_t> line_cut_path_lengths(const Graph& g, std::size_t edge_cap) {
  auto lg = iterated_line_graph(g, 1, edge_cap);
  auto cs = collect_cut_components(lg.graph);
  if (!cs.all_cut_paths()) {
    throw InternalError("line graph has a cut-edge component that is not a cut-path");
  }
  std::vector<std::size_t> lengths;
  for (const auto& c : cs.components) lengths.push_back(c.length);
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

CfcResult cfc_iterated(const Graph& g, std::size_t k, const SolveOptions& opts) {
  require_connected(g, "cfc_iterated");
  if (k == 0) return cfc_exact(g, opts);

  const auto n = g.order();
  if (n <= 1) return CfcResult::make_exact(0, CfcMethod::kComplete);
  if (is_path(g)) {
    if (k + 1 < n) return CfcResult::make_exact(path_cfc(n - k - 1), CfcMethod::kPathFormula);
    return CfcResult::make_exact(0, CfcMethod::kComplete);
  }
  if (is_complete(g)) {
    if (n == 3) return CfcResult::make_exact(1, CfcMethod::kComplete);
    return CfcResult::make_exact(2, CfcMethod::kTwoEdgeConnected);
  }
  if (is_star(g)) {
    if (k == 1 || n == 4) return CfcResult::make_exact(1, CfcMethod::kComplete);
    return CfcResult::make_exact(2, CfcMethod::kTwoEdgeConnected);
  }
  if (find_bridges(g).empty()) return CfcResult::make_exact(2, CfcMethod::kTwoEdgeConnected);
  return value_from_lengths(line_cut_path_lengths(g, opts.limits.edge_cap), k);
}

K0Result k0(const Graph& g, const SolveOptions& opts) {
  require_connected(g, "k0");
  const auto n = g.order();
  if (n < 2) throw PreconditionError("k0: needs at least 2 vertices");

  if (is_complete(g)) {
    if (n <= 3) return {std::nullopt, 0};
    return {1, 0};
  }
  if (is_path(g)) {
    if (n == 3) return {0, 0};
    return {n - 4, n - 4};
  }
  if (is_star(g)) {
    if (n == 4) return {std::nullopt, 1};
    return {2, 1};
  }
  if (find_bridges(g).empty()) return {0, 0};

  // Cut-edge family: for k >= 1 the iterates are never complete, so
  // cfc(L^k) <= 2 and cfc(L^k) == 2 coincide, and the first k with either
  // is the same.
  if (cfc_is_two(g, opts)) return {0, 0};

  auto lengths = line_cut_path_lengths(g, opts.limits.edge_cap);
  const std::size_t p0 = lengths.empty() ? 0 : lengths.front();
  const bool single_h2_component =
      path_cfc(p0) == 2 &&
      std::count_if(lengths.begin(), lengths.end(),
                    [](std::size_t len) { return path_cfc(len) == 2; }) == 1;
  std::size_t result;
  if (p0 <= 1 || single_h2_component) {
    result = 1;
  } else {
    auto longest = static_cast<std::size_t>(std::count(lengths.begin(), lengths.end(), p0));
    bool has_shorter_by_one =
        std::find(lengths.begin(), lengths.end(), p0 - 1) != lengths.end();
    if (longest == 1 && !has_shorter_by_one && p0 >= 4) {
      result = p0 - 2;
    } else if (longest == 1 && has_shorter_by_one && p0 >= 3) {
      result = p0 - 1;
    } else if (longest >= 2 && p0 >= 2) {
      result = p0;
    } else {
      throw InternalError("k0: cut-path lengths of L(G) match no case");
    }
  }
  return {result, result};
}

}  // namespace cfc
