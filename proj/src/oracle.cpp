#include "cfc/oracle.hpp"

#include <algorithm>
#include <string>

#include "cfc/error.hpp"
#include "cfc/verify.hpp"

namespace cfc {

namespace {

using EdgePath = std::vector<EdgeId>;

// All simple a-b paths of g as edge sequences, shortest first.
std::vector<EdgePath> simple_paths(const Graph& g, VertexId a, VertexId b,
                                   std::uint64_t& steps, std::uint64_t budget) {
  std::vector<EdgePath> out;
  std::vector<char> on_path(g.order(), 0);
  EdgePath edges;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (v == b) {
      out.push_back(edges);
      return;
    }
    on_path[v] = 1;
    auto nbrs = g.neighbors(v);
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (on_path[nbrs[i]]) continue;
      if (++steps > budget) {
        throw ScaleLimitError("oracle path enumeration exceeded " +
                              std::to_string(budget) + " steps");
      }
      edges.push_back(inc[i]);
      self(self, nbrs[i]);
      edges.pop_back();
    }
    on_path[v] = 0;
  };
  dfs(dfs, a);
  std::stable_sort(out.begin(), out.end(),
                   [](const EdgePath& x, const EdgePath& y) { return x.size() < y.size(); });
  return out;
}

class PrunedSearch {
 public:
  PrunedSearch(const Graph& g, const Limits& limits) : m_(g.size()) {
    std::uint64_t steps = 0;
    due_.resize(m_);
    for (VertexId a = 0; a < g.order(); ++a) {
      for (VertexId b = a + 1; b < g.order(); ++b) {
        auto paths = simple_paths(g, a, b, steps, limits.pair_step_budget);
        EdgeId last = 0;
        for (const auto& p : paths) last = std::max(last, *std::max_element(p.begin(), p.end()));
        due_[last].push_back(pairs_.size());
        pairs_.push_back(std::move(paths));
      }
    }
  }

  bool run(int t, std::vector<Color>& out) {
    t_ = t;
    colors_.assign(m_, 0);
    count_.assign(t + 1, 0);
    if (!assign(0, 0)) return false;
    out = colors_;
    return true;
  }

 private:
  bool assign(std::size_t d, int used) {
    if (d == m_) return true;
    int hi = std::min(used + 1, t_);
    for (int col = 1; col <= hi; ++col) {
      int now = std::max(used, col);
      if (static_cast<int>(m_ - d - 1) < t_ - now) continue;
      colors_[d] = col;
      if (pairs_due_ok(d) && assign(d + 1, now)) return true;
    }
    colors_[d] = 0;
    return false;
  }

  bool pairs_due_ok(std::size_t d) {
    for (auto idx : due_[d]) {
      bool ok = false;
      for (const auto& p : pairs_[idx]) {
        if (conflict_free(p)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool conflict_free(const EdgePath& p) {
    for (auto e : p) ++count_[colors_[e]];
    bool hit = false;
    for (auto e : p) {
      if (count_[colors_[e]] == 1) {
        hit = true;
        break;
      }
    }
    for (auto e : p) --count_[colors_[e]];
    return hit;
  }

  std::size_t m_;
  int t_ = 0;
  std::vector<std::vector<EdgePath>> pairs_;
  std::vector<std::vector<std::size_t>> due_;
  std::vector<Color> colors_;
  std::vector<int> count_;
};

// Reference mode: every restricted-growth string using exactly t colors, in
// lexicographic order, each checked by the full verifier.
class NaiveSearch {
 public:
  NaiveSearch(const Graph& g, const Limits& limits) : g_(g), limits_(limits) {
    limits_.verify_max_edges = std::max(limits_.verify_max_edges, g.size());
  }

  bool run(int t, std::vector<Color>& out) {
    t_ = t;
    colors_.assign(g_.size(), 0);
    if (!assign(0, 0)) return false;
    out = colors_;
    return true;
  }

 private:
  bool assign(std::size_t d, int used) {
    if (d == g_.size()) {
      if (used != t_) return false;
      return verify_cfc(g_, EdgeColoring(colors_), limits_).ok();
    }
    for (int col = 1; col <= std::min(used + 1, t_); ++col) {
      colors_[d] = col;
      if (assign(d + 1, std::max(used, col))) return true;
    }
    return false;
  }

  const Graph& g_;
  Limits limits_;
  int t_ = 0;
  std::vector<Color> colors_;
};

template <typename Search>
OracleResult minimise(const Graph& g, const Limits& limits, Search& search) {
  auto bound = static_cast<int>(g.order()) - 1;
  std::vector<Color> colors;
  for (int t = 1; t <= bound; ++t) {
    if (t > limits.oracle_max_colors) {
      throw ScaleLimitError("oracle limited to " + std::to_string(limits.oracle_max_colors) +
                            " colors; no coloring with fewer works");
    }
    if (search.run(t, colors)) return {t, EdgeColoring(std::move(colors))};
  }
  throw InternalError("no conflict-free connection coloring with at most n-1 = " +
                      std::to_string(bound) + " colors");
}

}  // namespace

OracleResult cfc_oracle(const Graph& g, const Limits& limits) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (g.size() > limits.oracle_max_edges) {
    throw ScaleLimitError("oracle limited to " + std::to_string(limits.oracle_max_edges) +
                          " edges; graph has " + std::to_string(g.size()));
  }
  if (g.order() <= 1) return {0, EdgeColoring{}};
  if (limits.naive_oracle) {
    NaiveSearch search(g, limits);
    return minimise(g, limits, search);
  }
  PrunedSearch search(g, limits);
  return minimise(g, limits, search);
}

}  // namespace cfc
