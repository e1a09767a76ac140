#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medianprod/distance.hpp"
#include "medianprod/graph.hpp"
#include "medianprod/patterns.hpp"
#include "medianprod/products.hpp"

namespace medianprod {

struct GridPoint {
  long a = 0;
  long b = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline long l1_distance(GridPoint p, GridPoint q) { return std::labs(p.a - q.a) + std::labs(p.b - q.b); }

// Vertex v sits at coords[v].
struct GridEmbedding {
  std::vector<GridPoint> coords;
  friend bool operator==(const GridEmbedding&, const GridEmbedding&) = default;
};

class InvalidEmbedding : public Error {
 public:
  using Error::Error;
};

// Number of 4-cycle subgraphs. Each square has two diagonals, and each
// diagonal {u,v} contributes one pair of common neighbors.
inline std::size_t count_squares(const Graph& g) {
  std::size_t twice = 0;
  std::vector<VertexSet> open;
  for (Vertex v = 0; v < g.order(); ++v) open.push_back(g.open_neighborhood(v));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto c = (open[u] & open[v]).size();
      if (c >= 2) twice += c * (c - 1) / 2;
    }
  return twice / 2;
}

// Empty when emb is a grid embedding of g: one point per vertex, injective,
// every edge a unit lattice step (so no loops).
inline std::optional<std::string> embedding_error(const Graph& g, const GridEmbedding& emb) {
  if (emb.coords.size() != g.order())
    return "embedding has " + std::to_string(emb.coords.size()) + " points for " +
           std::to_string(g.order()) + " vertices";
  std::map<GridPoint, Vertex> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, fresh] = seen.emplace(emb.coords[v], v);
    if (!fresh)
      return "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
             " share a lattice point";
  }
  for (auto [u, v] : g.edges()) {
    if (u == v) return "loop at vertex " + std::to_string(u) + " cannot be embedded";
    if (l1_distance(emb.coords[u], emb.coords[v]) != 1)
      return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not a unit step";
  }
  return std::nullopt;
}

// Square-count criterion for connected grid graphs: median iff the graph
// has exactly m - n + 1 squares.
inline bool ks_median_test(const Graph& g, const GridEmbedding& emb) {
  if (auto err = embedding_error(g, emb)) throw InvalidEmbedding(*err);
  if (!is_connected(g)) throw Error("square-count test needs a connected graph");
  if (g.order() == 0) return true;
  return count_squares(g) + g.order() == g.size() + 1;
}

struct UnfoldedGrid {
  Product product;  // P_k x E_l, vertex (i, j) zero-based at i * l + j
  GridEmbedding embedding;
};

// Lays P_k x E_l out on the lattice. With one-based i (path) and j (E_l,
// loop at j = 1): x = i, y = j when i + j is odd and 1 - j otherwise. The
// 45-degree rotation a = (x + y - c1) / 2, b = (y - x - c2) / 2 then turns
// every product edge into a unit step; c1, c2 shift the minima to zero.
inline UnfoldedGrid unfold(std::size_t k, std::size_t l) {
  if (k < 3 || l < 2)
    throw Error("unfold needs k >= 3 and l >= 2, got k=" + std::to_string(k) +
                " l=" + std::to_string(l));
  auto product = direct_product(make_pattern(PatternKind::Path, k), make_pattern(PatternKind::E, l));
  std::vector<std::pair<long, long>> xy(product.graph.order());
  long min_sum = 0, min_diff = 0;
  bool first = true;
  for (Vertex p = 0; p < product.graph.order(); ++p) {
    auto [gi, hj] = product.map.decode(p);
    const long i = static_cast<long>(gi) + 1, j = static_cast<long>(hj) + 1;
    const long x = i, y = (i + j) % 2 == 1 ? j : 1 - j;
    xy[p] = {x, y};
    if (first || x + y < min_sum) min_sum = x + y;
    if (first || y - x < min_diff) min_diff = y - x;
    first = false;
  }
  GridEmbedding emb;
  for (auto [x, y] : xy) emb.coords.push_back({(x + y - min_sum) / 2, (y - x - min_diff) / 2});
  if (auto err = embedding_error(product.graph, emb))
    throw std::logic_error("unfold produced an invalid embedding: " + *err);
  return {std::move(product), std::move(emb)};
}

}  // namespace medianprod
