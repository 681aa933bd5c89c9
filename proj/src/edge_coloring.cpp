#include "cfc/edge_coloring.hpp"

#include <algorithm>

#include "cfc/error.hpp"

namespace cfc {

EdgeColoring::EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (Color c : colors_) {
    if (c < 1) throw PreconditionError("colors are 1-based; got " + std::to_string(c));
    num_colors_ = std::max(num_colors_, c);
  }
}

EdgeColoring EdgeColoring::uniform(std::size_t num_edges, Color c) {
  return EdgeColoring(std::vector<Color>(num_edges, c));
}

}  // namespace cfc
