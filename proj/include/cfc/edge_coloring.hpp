#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

using Color = int;

// Total map E(G) -> {1..num_colors}, indexed by EdgeId. Color num_colors
// is used at least once (vacuous on an edgeless graph).
class EdgeColoring {
 public:
  EdgeColoring() = default;
  // Throws PreconditionError if a color is < 1. num_colors is the max color.
  explicit EdgeColoring(std::vector<Color> colors);

  static EdgeColoring uniform(std::size_t num_edges, Color c = 1);

  Color operator[](EdgeId e) const { return colors_[e]; }
  std::size_t size() const { return colors_.size(); }
  int num_colors() const { return num_colors_; }
  const std::vector<Color>& colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
  int num_colors_ = 0;
};

// Desk-scale knobs shared by the oracle, the verifier and the line-graph
// iterator. All of them can be overridden from the CLI.
struct Limits {
  std::size_t oracle_max_edges = 12;
  int oracle_max_colors = 12;
  std::size_t verify_max_edges = 24;
  std::size_t edge_cap = 50'000;
  // DFS node expansions allowed per vertex pair before giving up.
  std::uint64_t pair_step_budget = 20'000'000;
  // Plain restricted-growth enumeration + full verification, no pruning.
  bool naive_oracle = false;
};

}  // namespace cfc
