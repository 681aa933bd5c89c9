#pragma once

#include <optional>
#include <string>

#include "cfc/edge_coloring.hpp"
#include "cfc/graph.hpp"
#include "cfc/structure.hpp"

namespace cfc {

enum class CfcMethod {
  kComplete,
  kTwoEdgeConnected,
  kCutPathUnique,
  kCutPathMulti,
  kOrder2Components,
  kPathFormula,
  kStarFormula,
  kOracle,
  kHBound,
};

const char* to_string(CfcMethod m);

struct CfcResult {
  enum class Kind { kExact, kBound };

  Kind kind = Kind::kExact;
  int value = 0;  // exact value, or the lower end of a bound
  int hi = 0;     // upper end; equals value when exact
  CfcMethod method = CfcMethod::kComplete;
  std::optional<EdgeColoring> certificate;

  bool exact() const { return kind == Kind::kExact; }

  static CfcResult make_exact(int v, CfcMethod m, std::optional<EdgeColoring> cert = {}) {
    return {Kind::kExact, v, v, m, std::move(cert)};
  }
  static CfcResult make_bound(int h) { return {Kind::kBound, h, h + 1, CfcMethod::kHBound, {}}; }
};

enum class SolveMode {
  kAuto,     // closed forms, then the oracle, then the h bound
  kFormula,  // closed forms only; MethodRefusedError otherwise
  kOracle,   // exhaustive search only
};

struct SolveOptions {
  SolveMode mode = SolveMode::kAuto;
  bool with_certificate = true;
  Limits limits;
};

// Exact cfc where a closed form applies: complete graphs, paths, stars,
// noncomplete 2-edge-connected graphs, graphs whose cut-edge components are
// single edges, and the cut-path case with one or several components
// attaining h. Otherwise the oracle, or h <= cfc <= h + 1 beyond its reach.
CfcResult cfc_exact(const Graph& g, const SolveOptions& opts = {});

// Maximum cfc over the components of C(G); 0 without cut-edges.
int h_value(const Graph& g, const Limits& limits = {});

// cfc(L^k(g)) from closed forms on g (and L(g) for graphs with a cut-edge
// that are neither paths nor stars), without building L^k.
CfcResult cfc_iterated(const Graph& g, std::size_t k, const SolveOptions& opts = {});

struct K0Result {
  std::optional<std::size_t> k0;  // smallest k with cfc(L^k) == 2
  std::size_t first_k_le_2 = 0;   // smallest k with cfc(L^k) <= 2
};

K0Result k0(const Graph& g, const SolveOptions& opts = {});

// Order >= 4, has a cut-edge, neither a path nor a star.
bool in_cut_edge_family(const Graph& g);

// Lengths of the cut-path components of L(g), longest first.
std::vector<std::size_t> line_cut_path_lengths(const Graph& g, std::size_t edge_cap);

}  // namespace cfc
