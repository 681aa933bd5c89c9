#include "cfc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cfc/coloring.hpp"
#include "cfc/error.hpp"
#include "cfc/fixtures.hpp"
#include "cfc/json_io.hpp"
#include "cfc/line_graph.hpp"
#include "cfc/oracle.hpp"
#include "cfc/solver.hpp"
#include "cfc/structure.hpp"
#include "cfc/verify.hpp"

namespace cfc::cli {

namespace {

struct Settings {
  Limits limits;
  bool quiet = false;
  std::string file;
  std::string method = "auto";
  std::string output;
  std::string coloring;
  std::string provenance;
  std::size_t k = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

Graph load_connected(const std::string& path) {
  Graph g = parse_graph(read_file(path));
  if (!is_connected(g)) throw PreconditionError("input graph is not connected");
  return g;
}

Json input_summary(const Graph& g) {
  return Json{{"n", g.order()},
              {"m", g.size()},
              {"connected", true},
              {"complete", is_complete(g)},
              {"claw_free", is_claw_free(g)},
              {"two_edge_connected", is_two_edge_connected(g)}};
}

Json limits_json(const Limits& l) {
  return Json{{"max_edges", l.oracle_max_edges},
              {"max_colors", l.oracle_max_colors},
              {"verify_max_edges", l.verify_max_edges},
              {"edge_cap", l.edge_cap}};
}

Json value_json(const CfcResult& r) {
  if (r.exact()) return r.value;
  return Json{{"lo", r.value}, {"hi", r.hi}};
}

Json cmd_analyze(const Graph& g, const Settings& s) {
  auto cs = classify_cut_components(g, s.limits);
  Json result = cut_structure_to_json(g, cs);
  if (g.order() >= 2) {
    auto bd = blocks_to_json(g, block_decomposition(g));
    result["blocks"] = bd["blocks"];
    result["cut_vertices"] = bd["cut_vertices"];
  } else {
    result["blocks"] = Json::array();
    result["cut_vertices"] = Json::array();
  }
  result["claw_free"] = is_claw_free(g);
  result["complete"] = is_complete(g);
  return result;
}

SolveOptions solve_options(const Settings& s, SolveMode mode) {
  SolveOptions opts;
  opts.mode = mode;
  opts.limits = s.limits;
  return opts;
}

Json cmd_cfc(const Graph& g, const Settings& s) {
  SolveMode mode = SolveMode::kAuto;
  if (s.method == "formula") mode = SolveMode::kFormula;
  if (s.method == "oracle") mode = SolveMode::kOracle;
  return result_to_json(g, cfc_exact(g, solve_options(s, mode)));
}

Json cmd_color(const Graph& g, const Settings& s) {
  auto c = construct_cfc_coloring(g, s.limits);
  Json cj = coloring_to_json(g, c);
  if (s.output.empty()) return cj;
  write_file(s.output, cj.dump(2) + "\n");
  return Json{{"num_colors", c.num_colors()}, {"output", s.output}};
}

Json cmd_verify(const Graph& g, const Settings& s) {
  Json cj;
  try {
    cj = Json::parse(read_file(s.coloring));
  } catch (const Json::parse_error& e) {
    throw ColoringInputError(std::string("coloring is not valid JSON: ") + e.what());
  }
  auto c = coloring_from_json(g, cj);
  auto res = verify_cfc(g, c, s.limits);
  if (res.ok()) {
    return Json{{"status", "PASS"},
                {"num_colors", c.num_colors()},
                {"witness_pairs", res.witness->pairs.size()}};
  }
  auto [a, b] = *res.failing_pair;
  return Json{{"status", "FAIL"},
              {"num_colors", c.num_colors()},
              {"failing_pair", Json::array({g.label(a), g.label(b)})}};
}

// Returns nullopt when the edge list itself went to standard output.
std::optional<Json> cmd_line(const Graph& g, const Settings& s, std::ostream& out) {
  auto lg = iterated_line_graph(g, s.k, s.limits.edge_cap);
  auto text = render_graph(lg.graph);
  std::string sidecar = s.provenance;
  if (sidecar.empty() && !s.output.empty()) sidecar = s.output + ".provenance.json";
  if (!sidecar.empty()) write_file(sidecar, provenance_to_json(lg).dump(2) + "\n");
  if (s.output.empty()) {
    out << text;
    return std::nullopt;
  }
  write_file(s.output, text);
  Json r{{"k", s.k}, {"n", lg.graph.order()}, {"m", lg.graph.size()}, {"output", s.output}};
  r["provenance"] = sidecar;
  return r;
}

Json cmd_iterate(const Graph& g, const Settings& s) {
  auto opts = solve_options(s, SolveMode::kAuto);
  opts.with_certificate = false;
  Json values = Json::array();
  Json methods = Json::array();
  for (std::size_t k = 0; k <= s.k; ++k) {
    auto r = cfc_iterated(g, k, opts);
    values.push_back(value_json(r));
    methods.push_back(to_string(r.method));
  }
  return Json{{"k", s.k}, {"trajectory", std::move(values)}, {"methods", std::move(methods)}};
}

Json cmd_k0(const Graph& g, const Settings& s) {
  auto r = k0(g, solve_options(s, SolveMode::kAuto));
  Json out;
  out["k0"] = r.k0 ? Json(*r.k0) : Json(nullptr);
  out["first_k_le_2"] = r.first_k_le_2;
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-free connection numbers of graphs and their iterated line graphs", "cfc"};
  app.require_subcommand(0, 1);
  Settings s;
  std::string demo;
  app.add_option("--demo", demo, "Print a named fixture graph as an edge list and exit");
  app.add_option("--max-edges", s.limits.oracle_max_edges, "Largest graph the oracle accepts")
      ->capture_default_str();
  app.add_option("--max-colors", s.limits.oracle_max_colors, "Most colors the oracle tries")
      ->capture_default_str();
  app.add_option("--verify-max-edges", s.limits.verify_max_edges,
                 "Largest graph the verifier accepts")
      ->capture_default_str();
  app.add_option("--edge-cap", s.limits.edge_cap, "Edge cap for iterated line graphs")
      ->capture_default_str();
  app.add_flag("--naive-oracle", s.limits.naive_oracle,
               "Oracle without pruning (full enumeration + verifier)");
  app.add_flag("--quiet", s.quiet, "Omit timing from reports");

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", s.file, "Edge list or DOT file ('-' for stdin)")->required();
    return sub;
  };
  auto* analyze = with_file(app.add_subcommand("analyze", "Bridges, cut components, blocks"));
  auto* cfc = with_file(app.add_subcommand("cfc", "Conflict-free connection number"));
  cfc->add_option("--method", s.method, "auto, formula or oracle")
      ->check(CLI::IsMember({"auto", "formula", "oracle"}))
      ->capture_default_str();
  auto* oracle = with_file(app.add_subcommand("oracle", "Same as cfc --method oracle"));
  auto* color = with_file(app.add_subcommand("color", "Construct a CFC-coloring"));
  color->add_option("-o,--output", s.output, "Write the coloring JSON here");
  auto* verify = with_file(app.add_subcommand("verify", "Check a coloring"));
  verify->add_option("--coloring", s.coloring, "Coloring JSON")->required();
  auto* line = with_file(app.add_subcommand("line", "Emit L^k(G) as an edge list"));
  line->add_option("-k", s.k, "Number of iterations")->required();
  line->add_option("-o,--output", s.output, "Write the edge list here");
  line->add_option("--provenance", s.provenance, "Write the provenance JSON here");
  auto* iterate = with_file(app.add_subcommand("iterate", "cfc(L^0) .. cfc(L^k)"));
  iterate->add_option("-k", s.k, "Last iteration")->required();
  auto* k0cmd = with_file(app.add_subcommand("k0", "Smallest k with cfc(L^k) = 2"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (!demo.empty()) {
    auto g = fixtures::by_name(demo);
    if (!g) {
      err << "unknown demo '" << demo << "'; known:";
      for (const auto& n : fixtures::names()) err << ' ' << n;
      err << '\n';
      return kInputError;
    }
    out << render_graph(*g);
    return kOk;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return kInputError;
  }

  auto* sub = app.get_subcommands().front();
  if (sub == oracle) s.method = "oracle";
  auto start = std::chrono::steady_clock::now();
  try {
    Graph g = load_connected(s.file);
    Json result;
    if (sub == analyze) {
      result = cmd_analyze(g, s);
    } else if (sub == cfc || sub == oracle) {
      result = cmd_cfc(g, s);
    } else if (sub == color) {
      result = cmd_color(g, s);
    } else if (sub == verify) {
      result = cmd_verify(g, s);
    } else if (sub == line) {
      auto r = cmd_line(g, s, out);
      if (!r) return kOk;
      result = std::move(*r);
    } else if (sub == iterate) {
      result = cmd_iterate(g, s);
    } else if (sub == k0cmd) {
      result = cmd_k0(g, s);
    }

    Json report;
    report["schema"] = 1;
    report["command"] = sub->get_name();
    report["input"] = input_summary(g);
    report["result"] = std::move(result);
    if (report["result"].contains("method")) report["method"] = report["result"]["method"];
    if (!s.quiet) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      report["elapsed_ms"] = ms.count();
    }
    out << report.dump(2) << '\n';
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ColoringInputError& e) {
    err << "bad coloring: " << e.what() << '\n';
    return kBadColoring;
  } catch (const MethodRefusedError& e) {
    err << "refused: " << e.what() << '\n';
    return kMethodRefused;
  } catch (const ScaleLimitError& e) {
    err << "scale limit: " << e.what() << "\nlimits: " << limits_json(s.limits).dump() << '\n';
    return kScaleLimit;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace cfc::cli
