#include "cfc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "cfc/error.hpp"

namespace cfc {

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::edge_id(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (const auto& l : a.labels_) {
    if (!b.find(l)) return false;
  }
  for (const Edge& e : a.edges_) {
    auto u = b.find(a.label(e.u));
    auto v = b.find(a.label(e.v));
    if (!b.adjacent(*u, *v)) return false;
  }
  return true;
}

VertexId GraphBuilder::add_vertex(std::string_view label) {
  std::string s(label);
  auto it = g_.index_.find(s);
  if (it != g_.index_.end()) return it->second;
  auto id = static_cast<VertexId>(g_.labels_.size());
  g_.labels_.push_back(s);
  g_.index_.emplace(std::move(s), id);
  g_.adj_.emplace_back();
  g_.inc_.emplace_back();
  return id;
}

EdgeId GraphBuilder::add_edge(VertexId a, VertexId b) {
  if (a == b) {
    throw PreconditionError("loop at vertex '" + g_.labels_.at(a) + "'");
  }
  if (a >= g_.order() || b >= g_.order()) {
    throw PreconditionError("edge endpoint out of range");
  }
  auto k = Graph::key(a, b);
  if (auto it = g_.edge_index_.find(k); it != g_.edge_index_.end()) {
    return it->second;
  }
  auto id = static_cast<EdgeId>(g_.edges_.size());
  g_.edges_.emplace_back(a, b);
  g_.edge_index_.emplace(k, id);
  g_.adj_[a].push_back(b);
  g_.adj_[b].push_back(a);
  g_.inc_[a].push_back(id);
  g_.inc_[b].push_back(id);
  return id;
}

EdgeId GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw PreconditionError("loop at vertex '" + std::string(a) + "'");
  auto u = add_vertex(a);
  auto v = add_vertex(b);
  return add_edge(u, v);
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

namespace {

std::string wrap(std::string_view label) {
  if (label.find('|') == std::string_view::npos) return std::string(label);
  return "(" + std::string(label) + ")";
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Minimal DOT lexer: identifiers (bare or quoted), "--", '{', '}', ';', ','.
class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { kId, kEdgeOp, kLBrace, kRBrace, kSemi, kEnd } kind;
    std::string text;
    std::size_t line;
  };

  Token next() {
    skip();
    if (pos_ >= text_.size()) return {Token::kEnd, "", line_};
    char c = text_[pos_];
    if (c == '{') return single(Token::kLBrace);
    if (c == '}') return single(Token::kRBrace);
    if (c == ';' || c == ',') return single(Token::kSemi);
    if (c == '-' && peek(1) == '-') {
      pos_ += 2;
      return {Token::kEdgeOp, "--", line_};
    }
    if (c == '"') return quoted();
    if (is_id_char(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_id_char(text_[pos_]) &&
             !(text_[pos_] == '-' && peek(1) == '-')) {
        ++pos_;
      }
      return {Token::kId, std::string(text_.substr(start, pos_ - start)), line_};
    }
    throw ParseError(line_, std::string("unexpected character '") + c + "'");
  }

 private:
  static bool is_id_char(char c) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    switch (c) {
      case '{': case '}': case ';': case ',': case '"': case '=':
      case '[': case ']':
        return false;
      default:
        return true;
    }
  }

  char peek(std::size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }

  Token single(Token::Kind k) {
    ++pos_;
    return {k, std::string(1, text_[pos_ - 1]), line_};
  }

  Token quoted() {
    std::size_t line = line_;
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      if (text_[pos_] == '\n') ++line_;
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) throw ParseError(line, "unterminated quoted identifier");
    ++pos_;
    return {Token::kId, out, line};
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && peek(1) == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        pos_ += 2;
        while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) {
          if (text_[pos_] == '\n') ++line_;
          ++pos_;
        }
        pos_ = std::min(pos_ + 2, text_.size());
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool looks_like_dot(std::string_view text) {
  for (auto line : split_lines(text)) {
    auto toks = tokenize(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    auto first = toks.front();
    return (first == "graph" || first.starts_with("graph{")) &&
           text.find('{') != std::string_view::npos;
  }
  return false;
}

}  // namespace

std::string edge_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  return wrap(a) + "|" + wrap(b);
}

std::string edge_key(const Graph& g, const Edge& e) {
  return edge_key(g.label(e.u), g.label(e.v));
}

Graph parse_edge_list(std::string_view text) {
  GraphBuilder b;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (is_blank(line)) continue;
    auto toks = tokenize(line);
    if (toks.front().front() == '#') continue;
    if (toks.size() != 2) {
      throw ParseError(i + 1, "expected two vertex labels, got " +
                                  std::to_string(toks.size()) + " tokens");
    }
    if (toks[0] == toks[1]) {
      throw ParseError(i + 1, "loop edge '" + std::string(toks[0]) + " " +
                                  std::string(toks[1]) + "'");
    }
    b.add_edge(toks[0], toks[1]);
  }
  return std::move(b).build();
}

Graph parse_dot(std::string_view text) {
  using Tok = DotLexer::Token;
  DotLexer lex(text);
  auto t = lex.next();
  if (t.kind != Tok::kId || t.text != "graph") {
    throw ParseError(t.line, "expected 'graph'");
  }
  t = lex.next();
  if (t.kind == Tok::kId) t = lex.next();  // graph name
  if (t.kind != Tok::kLBrace) throw ParseError(t.line, "expected '{'");

  GraphBuilder b;
  t = lex.next();
  while (t.kind != Tok::kRBrace) {
    if (t.kind == Tok::kEnd) throw ParseError(t.line, "missing '}'");
    if (t.kind == Tok::kSemi) {
      t = lex.next();
      continue;
    }
    if (t.kind != Tok::kId) throw ParseError(t.line, "expected vertex identifier");
    std::string prev = t.text;
    b.add_vertex(prev);
    t = lex.next();
    while (t.kind == Tok::kEdgeOp) {
      auto rhs = lex.next();
      if (rhs.kind != Tok::kId) throw ParseError(rhs.line, "expected vertex after '--'");
      if (rhs.text == prev) throw ParseError(rhs.line, "loop edge at '" + prev + "'");
      b.add_edge(prev, rhs.text);
      prev = rhs.text;
      t = lex.next();
    }
  }
  auto rest = lex.next();
  if (rest.kind != Tok::kEnd) throw ParseError(rest.line, "trailing input after '}'");
  return std::move(b).build();
}

Graph parse_graph(std::string_view text) {
  if (looks_like_dot(text)) return parse_dot(text);
  return parse_edge_list(text);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

std::string render_dot(const Graph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "  " << quote(g.label(v)) << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << quote(g.label(e.u)) << " -- " << quote(g.label(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_graph(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return render_dot(g);
  }
  return render_edge_list(g);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

bool is_complete(const Graph& g) {
  auto n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<char> keep(g.order(), 0);
  for (auto v : vertices) {
    if (v >= g.order()) throw PreconditionError("vertex id out of range");
    keep[v] = 1;
  }
  GraphBuilder b;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (keep[v]) b.add_vertex(g.label(v));
  }
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) b.add_edge(g.label(e.u), g.label(e.v));
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) {
    auto v = g.find(l);
    if (!v) throw PreconditionError("vertex '" + l + "' is not in the graph");
    ids.push_back(*v);
  }
  return induced_subgraph(g, ids);
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> keep(g.size(), 0);
  std::vector<char> touched(g.order(), 0);
  for (auto e : edges) {
    keep.at(e) = 1;
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  }
  GraphBuilder b;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (touched[v]) b.add_vertex(g.label(v));
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (keep[e]) b.add_edge(g.label(g.edge(e).u), g.label(g.edge(e).v));
  }
  return std::move(b).build();
}

std::optional<std::vector<VertexId>> path_order(const Graph& g) {
  auto n = g.order();
  if (n < 2 || g.size() != n - 1) return std::nullopt;
  std::optional<VertexId> start;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 2 || g.degree(v) == 0) return std::nullopt;
    if (g.degree(v) == 1 && !start) start = v;
  }
  if (!start) return std::nullopt;
  std::vector<VertexId> seq{*start};
  std::vector<char> seen(n, 0);
  seen[*start] = 1;
  while (seq.size() < n) {
    bool advanced = false;
    for (auto w : g.neighbors(seq.back())) {
      if (!seen[w]) {
        seen[w] = 1;
        seq.push_back(w);
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
  return seq;
}

bool is_path(const Graph& g) { return path_order(g).has_value(); }

bool is_star(const Graph& g) {
  auto n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

}  // namespace cfc
