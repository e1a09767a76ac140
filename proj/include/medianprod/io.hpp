#pragma once

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "medianprod/graph.hpp"
#include "medianprod/grid_embed.hpp"

namespace medianprod {

// Text graph format:
//
//   # comment
//   n 4
//   0 1
//   1 1        <- loop
//   v 0 2 3    <- optional lattice coordinates: vertex, a, b
//
// Blank lines and anything after '#' are ignored. Writers emit edges sorted
// lexicographically with the smaller endpoint first.
struct GraphDocument {
  Graph graph;
  std::optional<GridEmbedding> embedding;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const std::string& source) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a decimal integer, got '" + std::string(tok) + "'", source);
  return value;
}

}  // namespace detail

inline GraphDocument read_graph(std::istream& in, const std::string& source = {}) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::optional<GridPoint>> coords;
  bool any_coords = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (!n) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError(lineno, "expected header 'n <count>'", source);
      n = detail::parse_number<std::size_t>(tok[1], lineno, source);
      coords.assign(*n, std::nullopt);
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 4) throw ParseError(lineno, "coordinate line must be 'v <vertex> <a> <b>'", source);
      auto v = detail::parse_number<std::size_t>(tok[1], lineno, source);
      if (v >= *n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range", source);
      if (coords[v]) throw ParseError(lineno, "second coordinate line for vertex " + std::to_string(v), source);
      coords[v] = GridPoint{detail::parse_number<long>(tok[2], lineno, source),
                            detail::parse_number<long>(tok[3], lineno, source)};
      any_coords = true;
      continue;
    }
    if (tok.size() != 2) throw ParseError(lineno, "edge line must be 'u v'", source);
    Edge e{detail::parse_number<std::size_t>(tok[0], lineno, source),
           detail::parse_number<std::size_t>(tok[1], lineno, source)};
    if (e.first >= *n || e.second >= *n)
      throw ParseError(lineno, "endpoint out of range for n=" + std::to_string(*n), source);
    auto key = normalized(e);
    for (const auto& seen : edges)
      if (normalized(seen) == key)
        throw ParseError(lineno, "duplicate edge " + std::to_string(key.first) + " " +
                                     std::to_string(key.second),
                         source);
    edges.push_back(e);
  }
  if (!n) throw ParseError(lineno, "missing header 'n <count>'", source);

  GraphDocument doc{Graph::from_edges(*n, edges), std::nullopt};
  if (any_coords) {
    GridEmbedding emb;
    for (std::size_t v = 0; v < *n; ++v) {
      if (!coords[v]) throw ParseError(0, "no coordinates for vertex " + std::to_string(v), source);
      emb.coords.push_back(*coords[v]);
    }
    doc.embedding = std::move(emb);
  }
  return doc;
}

inline GraphDocument read_graph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

inline GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_graph(in, path);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_embedding(std::ostream& out, const GridEmbedding& emb) {
  for (std::size_t v = 0; v < emb.coords.size(); ++v)
    out << "v " << v << ' ' << emb.coords[v].a << ' ' << emb.coords[v].b << '\n';
}

inline std::string to_text(const Graph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

using VertexLabeler = std::function<std::string(Vertex)>;

// Graphviz output. With an embedding, nodes are pinned at (a, b).
inline void write_dot(std::ostream& out, const Graph& g, const VertexLabeler& label = {},
                      const GridEmbedding* emb = nullptr) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    bool open = false;
    auto attr = [&](const std::string& kv) {
      out << (open ? ", " : " [") << kv;
      open = true;
    };
    if (label) attr("label=\"" + label(v) + "\"");
    if (emb) attr("pos=\"" + std::to_string(emb->coords[v].a) + "," + std::to_string(emb->coords[v].b) + "!\"");
    out << (open ? "];\n" : ";\n");
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace medianprod
