#include "cfc/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cfc/error.hpp"
#include "cfc/oracle.hpp"

namespace cfc {

namespace {

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
}

constexpr std::uint32_t kUnvisited = 0xffffffffu;

// Shared low-point DFS. Calls on_tree_edge_done(parent, child, edge) when
// the child's subtree is finished, with low values up to date.
template <typename OnDone, typename OnEdge>
void lowpoint_dfs(const Graph& g, std::vector<std::uint32_t>& disc,
                  std::vector<std::uint32_t>& low, OnDone&& on_done, OnEdge&& on_edge) {
  auto n = g.order();
  disc.assign(n, kUnvisited);
  low.assign(n, 0);
  std::uint32_t timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    std::vector<Frame> stack{{root, kUnvisited, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      auto inc = g.incident(f.v);
      if (f.next < nbrs.size()) {
        auto w = nbrs[f.next];
        auto e = inc[f.next];
        ++f.next;
        if (e == f.via) continue;
        if (disc[w] == kUnvisited) {
          on_edge(e, true);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          on_edge(e, false);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      auto done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        on_done(parent, done.v, done.via);
      }
    }
  }
}

}  // namespace

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kOrder2: return "ORDER2";
    case ComponentKind::kCutPath: return "CUT_PATH";
    case ComponentKind::kOtherTree: return "OTHER_TREE";
  }
  return "?";
}

bool CutStructure::all_cut_paths() const {
  return std::all_of(components.begin(), components.end(), [](const CutComponent& c) {
    return c.kind != ComponentKind::kOtherTree;
  });
}

std::size_t CutStructure::count_attaining_h() const {
  if (!h) return 0;
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(),
      [&](const CutComponent& c) { return c.cfc && *c.cfc == *h; }));
}

std::vector<EdgeId> find_bridges(const Graph& g) {
  require_connected(g, "find_bridges");
  std::vector<std::uint32_t> disc, low;
  std::vector<EdgeId> out;
  lowpoint_dfs(
      g, disc, low,
      [&](VertexId parent, VertexId child, EdgeId via) {
        if (low[child] > disc[parent]) out.push_back(via);
      },
      [](EdgeId, bool) {});
  std::sort(out.begin(), out.end());
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  require_connected(g, "block_decomposition");
  if (g.order() < 2) throw PreconditionError("block_decomposition: needs at least 2 vertices");

  std::vector<std::uint32_t> disc, low;
  std::vector<EdgeId> edge_stack;
  BlockDecomposition out;
  lowpoint_dfs(
      g, disc, low,
      [&](VertexId parent, VertexId child, EdgeId via) {
        if (low[child] < disc[parent]) return;
        std::vector<EdgeId> block;
        while (true) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == via) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      },
      [&](EdgeId e, bool) { edge_stack.push_back(e); });
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::vector<std::size_t>> member(g.order());
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (auto v : block_vertices(g, out.blocks[i])) member[v].push_back(i);
  }
  out.tree.num_blocks = out.blocks.size();
  for (VertexId v = 0; v < g.order(); ++v) {
    if (member[v].size() < 2) continue;
    auto node = out.blocks.size() + out.cut_vertices.size();
    out.cut_vertices.push_back(v);
    for (auto b : member[v]) out.tree.links.emplace_back(b, node);
  }
  return out;
}

std::vector<VertexId> block_vertices(const Graph& g, const std::vector<EdgeId>& block) {
  std::vector<VertexId> vs;
  for (auto e : block) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool is_two_edge_connected(const Graph& g) {
  require_connected(g, "is_two_edge_connected");
  return g.order() >= 2 && find_bridges(g).empty();
}

bool is_two_connected(const Graph& g) {
  require_connected(g, "is_two_connected");
  if (g.order() < 3) return false;
  return block_decomposition(g).cut_vertices.empty();
}

bool is_claw_free(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
        }
      }
    }
  }
  return true;
}

int path_cfc(std::size_t edges) {
  // ceil(log2(edges + 1)) == bit width of `edges`.
  int bits = 0;
  while (edges > 0) {
    ++bits;
    edges >>= 1;
  }
  return bits;
}

CutStructure collect_cut_components(const Graph& g) {
  CutStructure cs;
  cs.bridges = find_bridges(g);
  if (cs.bridges.empty()) return cs;

  // Union-find over the bridge forest.
  std::vector<VertexId> parent(g.order());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> comp_degree(g.order(), 0);
  for (auto e : cs.bridges) {
    const auto& ed = g.edge(e);
    parent[find(ed.u)] = find(ed.v);
    ++comp_degree[ed.u];
    ++comp_degree[ed.v];
  }

  std::vector<std::size_t> slot(g.order(), SIZE_MAX);
  for (auto e : cs.bridges) {
    auto r = find(g.edge(e).u);
    if (slot[r] == SIZE_MAX) {
      slot[r] = cs.components.size();
      cs.components.emplace_back();
    }
    cs.components[slot[r]].edges.push_back(e);
  }

  for (auto& c : cs.components) {
    std::vector<VertexId> vs;
    for (auto e : c.edges) {
      vs.push_back(g.edge(e).u);
      vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    c.length = c.edges.size();
    c.is_path = std::all_of(vs.begin(), vs.end(),
                            [&](VertexId v) { return comp_degree[v] <= 2; });
    if (c.is_path) {
      // Walk from the end with the smaller id.
      VertexId cur = *std::find_if(vs.begin(), vs.end(),
                                   [&](VertexId v) { return comp_degree[v] == 1; });
      std::vector<VertexId> order{cur};
      std::vector<EdgeId> edge_order;
      std::vector<char> used(g.size(), 0);
      std::vector<char> in_comp(g.size(), 0);
      for (auto e : c.edges) in_comp[e] = 1;
      while (edge_order.size() < c.length) {
        auto inc = g.incident(cur);
        for (auto e : inc) {
          if (in_comp[e] && !used[e]) {
            used[e] = 1;
            edge_order.push_back(e);
            cur = g.edge(e).other(cur);
            order.push_back(cur);
            break;
          }
        }
      }
      c.vertices = std::move(order);
      c.edges = std::move(edge_order);
    } else {
      c.vertices = std::move(vs);
    }

    if (c.length == 1) {
      c.kind = ComponentKind::kOrder2;
    } else if (c.is_path &&
               std::all_of(c.vertices.begin() + 1, c.vertices.end() - 1,
                           [&](VertexId v) { return g.degree(v) == 2; })) {
      c.kind = ComponentKind::kCutPath;
    } else {
      c.kind = ComponentKind::kOtherTree;
    }
    if (c.kind != ComponentKind::kOtherTree) cs.p = std::max(cs.p, c.length);
  }
  return cs;
}

CutStructure classify_cut_components(const Graph& g, const Limits& limits) {
  CutStructure cs = collect_cut_components(g);
  int h = 0;
  for (auto& c : cs.components) {
    if (c.is_path) {
      c.cfc = path_cfc(c.length);
    } else {
      Graph tree = edge_subgraph(g, c.edges);
      if (is_star(tree)) {
        c.cfc = static_cast<int>(c.length);
      } else {
        try {
          c.cfc = cfc_oracle(tree, limits).value;
        } catch (const ScaleLimitError& err) {
          std::string names;
          for (auto v : c.vertices) names += (names.empty() ? "" : ", ") + g.label(v);
          throw ScaleLimitError("h undecidable at this scale: tree component {" + names +
                                "} (" + err.what() + ")");
        }
      }
    }
    h = std::max(h, *c.cfc);
  }
  cs.h = h;
  return cs;
}

std::vector<EdgeId> nontrivial_block_matching(const Graph& g) {
  auto bd = block_decomposition(g);
  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (bd.blocks[i].size() >= 2) nontrivial.push_back(i);
  }
  if (nontrivial.empty()) throw PreconditionError("graph has no nontrivial block");

  // Breadth-first order over the block-cut tree, starting at block 0.
  std::size_t nodes = bd.blocks.size() + bd.cut_vertices.size();
  std::vector<std::vector<std::size_t>> tree(nodes);
  for (auto [b, c] : bd.tree.links) {
    tree[b].push_back(c);
    tree[c].push_back(b);
  }
  std::vector<std::size_t> order;
  std::vector<char> seen(nodes, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x < bd.blocks.size() && bd.blocks[x].size() >= 2) order.push_back(x);
    for (auto y : tree[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }

  std::vector<char> is_cut(g.order(), 0);
  for (auto v : bd.cut_vertices) is_cut[v] = 1;

  // Greedy choice is the first branch; backtrack only if it dead-ends.
  std::vector<char> used(g.order(), 0);
  std::vector<EdgeId> chosen;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    std::vector<EdgeId> cands;
    for (auto e : bd.blocks[order[i]]) {
      const auto& ed = g.edge(e);
      if (!used[ed.u] && !used[ed.v]) cands.push_back(e);
    }
    std::stable_partition(cands.begin(), cands.end(), [&](EdgeId e) {
      return !is_cut[g.edge(e).u] && !is_cut[g.edge(e).v];
    });
    for (auto e : cands) {
      const auto& ed = g.edge(e);
      used[ed.u] = used[ed.v] = 1;
      chosen.push_back(e);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      used[ed.u] = used[ed.v] = 0;
    }
    return false;
  };
  if (!search(search, 0)) throw InternalError("no matching across nontrivial blocks");
  return chosen;
}

std::vector<VertexId> path_through_edge(const Graph& g, VertexId u, VertexId v, EdgeId e,
                                        const Limits& limits) {
  if (u >= g.order() || v >= g.order() || e >= g.size()) {
    throw PreconditionError("path_through_edge: vertex or edge out of range");
  }
  if (u == v) throw PreconditionError("path_through_edge: endpoints must differ");
  if (!is_connected(g) || !is_two_connected(g)) {
    throw PreconditionError("path_through_edge: graph is not 2-connected");
  }

  std::vector<char> on_path(g.order(), 0);
  std::vector<VertexId> path{u};
  std::uint64_t steps = 0;
  auto dfs = [&](auto&& self, VertexId x, bool has_e) -> bool {
    if (x == v) return has_e;
    on_path[x] = 1;
    auto nbrs = g.neighbors(x);
    auto inc = g.incident(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (on_path[nbrs[i]]) continue;
      if (++steps > limits.pair_step_budget) {
        throw ScaleLimitError("path_through_edge: search budget exhausted");
      }
      path.push_back(nbrs[i]);
      if (self(self, nbrs[i], has_e || inc[i] == e)) return true;
      path.pop_back();
    }
    on_path[x] = 0;
    return false;
  };
  if (!dfs(dfs, u, false)) {
    throw InternalError("no u-v path through the given edge in a 2-connected graph");
  }
  return path;
}

}  // namespace cfc
