#include "cfc/fixtures.hpp"

#include <charconv>

namespace cfc::fixtures {

namespace {

std::string s(std::size_t i) { return std::to_string(i); }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<std::size_t> number(std::string_view t) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) return std::nullopt;
  return v;
}

}  // namespace

Graph path(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(s(i));
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(s(i), s(i + 1));
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_edge(s(i), s((i + 1) % n));
  return std::move(b).build();
}

Graph complete(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(s(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(s(i), s(j));
  }
  return std::move(b).build();
}

Graph star(std::size_t r) {
  GraphBuilder b;
  b.add_vertex("0");
  for (std::size_t i = 1; i <= r; ++i) b.add_edge("0", s(i));
  return std::move(b).build();
}

Graph paw() { return parse_edge_list("0 1\n1 2\n0 2\n2 3\n"); }

Graph bowtie() { return parse_edge_list("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n"); }

Graph petersen() {
  GraphBuilder b;
  for (std::size_t i = 0; i < 5; ++i) {
    b.add_edge(s(i), s((i + 1) % 5));          // outer cycle
    b.add_edge(s(i), s(i + 5));                // spokes
    b.add_edge(s(i + 5), s((i + 2) % 5 + 5));  // inner pentagram
  }
  return std::move(b).build();
}

Graph triangle_chain(std::size_t triangles, std::size_t link) {
  GraphBuilder b;
  std::size_t next = 0;
  std::string prev_exit;
  for (std::size_t t = 0; t < triangles; ++t) {
    auto a = s(next++), c = s(next++), d = s(next++);
    b.add_edge(a, c);
    b.add_edge(c, d);
    b.add_edge(a, d);
    if (t > 0) {
      std::string cur = prev_exit;
      for (std::size_t i = 1; i < link; ++i) {
        auto mid = s(next++);
        b.add_edge(cur, mid);
        cur = mid;
      }
      b.add_edge(cur, a);
    }
    prev_exit = d;
  }
  return std::move(b).build();
}

Graph triangle_string(std::size_t triangles) {
  GraphBuilder b;
  for (std::size_t t = 0; t < triangles; ++t) {
    auto a = s(2 * t), c = s(2 * t + 1), d = s(2 * t + 2);
    b.add_edge(a, c);
    b.add_edge(c, d);
    b.add_edge(a, d);
  }
  return std::move(b).build();
}

Graph spider(std::size_t legs, std::size_t len) {
  GraphBuilder b;
  b.add_vertex("0");
  std::size_t next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    std::string cur = "0";
    for (std::size_t i = 0; i < len; ++i) {
      auto v = s(next++);
      b.add_edge(cur, v);
      cur = v;
    }
  }
  return std::move(b).build();
}

Graph complete_with_tails(std::size_t n, const std::vector<std::size_t>& lens) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(s(i), s(j));
  }
  std::size_t next = n;
  for (std::size_t t = 0; t < lens.size(); ++t) {
    std::string cur = s(t);
    for (std::size_t i = 0; i < lens[t]; ++i) {
      auto v = s(next++);
      b.add_edge(cur, v);
      cur = v;
    }
  }
  return std::move(b).build();
}

Graph complete_with_tail(std::size_t n, std::size_t len) {
  return complete_with_tails(n, {len});
}

std::optional<Graph> by_name(std::string_view name) {
  auto parts = split(name, ':');
  auto head = parts[0];
  std::vector<std::size_t> args;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto v = number(parts[i]);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  auto arg = [&](std::size_t i, std::size_t dflt) { return i < args.size() ? args[i] : dflt; };

  if (head == "paw" && args.empty()) return paw();
  if (head == "bowtie" && args.empty()) return bowtie();
  if (head == "petersen" && args.empty()) return petersen();
  if (args.size() > 2) return std::nullopt;
  if (head == "path" && args.size() == 1) return path(args[0]);
  if (head == "cycle" && args.size() == 1 && args[0] >= 3) return cycle(args[0]);
  if (head == "complete" && args.size() == 1) return complete(args[0]);
  if (head == "star" && args.size() == 1) return star(args[0]);
  if (head == "spider") return spider(arg(0, 3), arg(1, 2));
  if (head == "triangle-chain") return triangle_chain(arg(0, 2), arg(1, 3));
  if (head == "complete-tail" && args.size() == 2) return complete_with_tail(args[0], args[1]);
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"path:N",   "cycle:N",   "complete:N", "star:R",
          "paw",      "bowtie",    "petersen",   "spider[:LEGS[:LEN]]",
          "triangle-chain[:TRIANGLES[:LINK]]",   "complete-tail:N:LEN"};
}

}  // namespace cfc::fixtures
