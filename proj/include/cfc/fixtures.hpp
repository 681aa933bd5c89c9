#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/graph.hpp"

// Named graphs used by the tests and by `cfc --demo`. Vertices are labelled
// 0, 1, 2, ... unless stated otherwise.
namespace cfc::fixtures {

Graph path(std::size_t n);      // P_n, n vertices
Graph cycle(std::size_t n);     // C_n
Graph complete(std::size_t n);  // K_n
Graph star(std::size_t r);      // K_{1,r}, centre 0
Graph paw();                    // triangle 0-1-2 plus pendant edge 2-3
Graph bowtie();                 // triangles 0-1-2 and 2-3-4
Graph petersen();
// Triangles joined in a row by paths of `link` edges whose inner vertices
// have degree 2. triangle_chain(2, 3) is triangle-path(3)-triangle.
Graph triangle_chain(std::size_t triangles, std::size_t link);
// Triangles glued in a row at single cut vertices.
Graph triangle_string(std::size_t triangles);
// `legs` paths of `len` edges sharing the centre 0.
Graph spider(std::size_t legs, std::size_t len);
// K_n with a path of `len` edges hanging from vertex 0.
Graph complete_with_tail(std::size_t n, std::size_t len);
// K_n with paths of the given lengths hanging from vertices 0, 1, 2, ...
Graph complete_with_tails(std::size_t n, const std::vector<std::size_t>& lens);

// "path:N", "cycle:N", "complete:N", "star:R", "spider:LEGS:LEN",
// "triangle-chain[:T[:LINK]]", "paw", "bowtie", "petersen",
// "complete-tail:N:LEN".
std::optional<Graph> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace cfc::fixtures
