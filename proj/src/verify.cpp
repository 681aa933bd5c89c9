#include "cfc/verify.hpp"

#include <string>

#include "cfc/error.hpp"

namespace cfc {

namespace {

// Iterative DFS from `source` over simple paths. Whenever the current path
// ends at a vertex w with some singleton color, on_hit(w, path, color) is
// called; returning true stops the search.
class PathSearch {
 public:
  PathSearch(const Graph& g, const EdgeColoring& c, std::uint64_t budget)
      : g_(g), c_(c), budget_(budget), count_(c.num_colors() + 1, 0),
        on_path_(g.order(), 0) {}

  template <typename OnHit>
  bool run(VertexId source, VertexId target, OnHit&& on_hit) {
    struct Frame {
      VertexId v;
      std::size_t next;
    };
    std::vector<Frame> stack{{source, 0}};
    std::vector<VertexId> path{source};
    std::vector<EdgeId> path_edges;
    on_path_[source] = 1;
    std::uint64_t steps = 0;
    bool found = false;

    while (!stack.empty() && !found) {
      auto& top = stack.back();
      auto nbrs = g_.neighbors(top.v);
      auto inc = g_.incident(top.v);
      if (top.next >= nbrs.size() || top.v == target) {
        on_path_[top.v] = 0;
        stack.pop_back();
        path.pop_back();
        if (!path_edges.empty()) {
          pop_color(c_[path_edges.back()]);
          path_edges.pop_back();
        }
        continue;
      }
      auto w = nbrs[top.next];
      auto e = inc[top.next];
      ++top.next;
      if (on_path_[w]) continue;
      if (++steps > budget_) {
        throw ScaleLimitError("conflict-free path search exceeded " +
                              std::to_string(budget_) + " steps from vertex '" +
                              g_.label(source) + "'");
      }
      push_color(c_[e]);
      path_edges.push_back(e);
      path.push_back(w);
      on_path_[w] = 1;
      stack.push_back({w, 0});
      if (singletons_ > 0) found = on_hit(w, path, first_singleton(path_edges));
    }
    // Unwind whatever is left so the object can be reused.
    while (!stack.empty()) {
      on_path_[stack.back().v] = 0;
      stack.pop_back();
    }
    for (auto e : path_edges) pop_color(c_[e]);
    return found;
  }

 private:
  void push_color(Color col) {
    auto& n = count_[col];
    if (n == 0) ++singletons_;
    if (n == 1) --singletons_;
    ++n;
  }
  void pop_color(Color col) {
    auto& n = count_[col];
    if (n == 1) --singletons_;
    if (n == 2) ++singletons_;
    --n;
  }
  Color first_singleton(const std::vector<EdgeId>& edges) const {
    for (auto e : edges) {
      if (count_[c_[e]] == 1) return c_[e];
    }
    return 0;
  }

  const Graph& g_;
  const EdgeColoring& c_;
  std::uint64_t budget_;
  std::vector<int> count_;
  std::vector<char> on_path_;
  int singletons_ = 0;
};

void require_total(const Graph& g, const EdgeColoring& c) {
  if (c.size() == g.size()) return;
  if (c.size() > g.size()) {
    throw PreconditionError("coloring has " + std::to_string(c.size()) +
                            " entries for " + std::to_string(g.size()) + " edges");
  }
  std::string missing;
  for (auto e = static_cast<EdgeId>(c.size()); e < g.size(); ++e) {
    if (!missing.empty()) missing += ", ";
    missing += edge_key(g, g.edge(e));
  }
  throw PreconditionError("uncolored edges: " + missing);
}

}  // namespace

Color unique_color_on_path(const Graph& g, std::span<const VertexId> path,
                           const EdgeColoring& c) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> count(c.num_colors() + 1, 0);
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.order()) throw PreconditionError("vertex id out of range");
    if (seen[path[i]]) {
      throw PreconditionError("path repeats vertex '" + g.label(path[i]) + "'");
    }
    seen[path[i]] = 1;
    if (i == 0) continue;
    auto e = g.edge_id(path[i - 1], path[i]);
    if (!e) {
      throw PreconditionError("'" + g.label(path[i - 1]) + "' and '" +
                              g.label(path[i]) + "' are not adjacent");
    }
    edges.push_back(*e);
    ++count.at(c[*e]);
  }
  for (auto e : edges) {
    if (count[c[e]] == 1) return c[e];
  }
  return 0;
}

bool is_conflict_free_path(const Graph& g, std::span<const VertexId> path,
                           const EdgeColoring& c) {
  return unique_color_on_path(g, path, c) != 0;
}

std::optional<std::vector<VertexId>> exists_conflict_free_path(
    const Graph& g, const EdgeColoring& c, VertexId u, VertexId v,
    const Limits& limits) {
  if (u == v) throw PreconditionError("endpoints must be distinct");
  if (u >= g.order() || v >= g.order()) throw PreconditionError("vertex id out of range");
  require_total(g, c);
  PathSearch search(g, c, limits.pair_step_budget);
  std::optional<std::vector<VertexId>> result;
  search.run(u, v, [&](VertexId w, const std::vector<VertexId>& path, Color) {
    if (w != v) return false;
    result = path;
    return true;
  });
  return result;
}

VerifyResult verify_cfc(const Graph& g, const EdgeColoring& c, const Limits& limits) {
  require_total(g, c);
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (g.size() > limits.verify_max_edges) {
    throw ScaleLimitError("verifier limited to " + std::to_string(limits.verify_max_edges) +
                          " edges; graph has " + std::to_string(g.size()));
  }

  auto n = g.order();
  // found[a*n+b] for a < b, filled opportunistically while searching.
  std::vector<std::optional<PairWitness>> found(n * n);
  PathSearch search(g, c, limits.pair_step_budget);

  CfcWitness witness;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!found[a * n + b]) {
        search.run(a, b, [&](VertexId w, const std::vector<VertexId>& path, Color col) {
          auto& slot = found[a * n + w];
          if (w > a && !slot) slot = PairWitness{a, w, path, col};
          return w == b;
        });
      }
      if (!found[a * n + b]) return VerifyResult{std::nullopt, std::pair{a, b}};
      witness.pairs.push_back(*found[a * n + b]);
    }
  }
  return VerifyResult{std::move(witness), std::nullopt};
}

}  // namespace cfc
