#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "medianprod/graph.hpp"

namespace medianprod {

// Row-major (g-major) pairing of factor vertices: (a, x) <-> a * n_h + x.
class ProductVertexMap {
 public:
  ProductVertexMap() = default;
  ProductVertexMap(std::size_t n_g, std::size_t n_h) : n_g_(n_g), n_h_(n_h) {}

  std::size_t first_order() const noexcept { return n_g_; }
  std::size_t second_order() const noexcept { return n_h_; }
  std::size_t order() const noexcept { return n_g_ * n_h_; }

  Vertex encode(Vertex a, Vertex x) const { return a * n_h_ + x; }
  std::pair<Vertex, Vertex> decode(Vertex p) const { return {p / n_h_, p % n_h_}; }

  friend bool operator==(const ProductVertexMap&, const ProductVertexMap&) = default;

 private:
  std::size_t n_g_ = 0;
  std::size_t n_h_ = 0;
};

struct Product {
  Graph graph;
  ProductVertexMap map;
};

// (a,x) ~ (b,y) iff a ~ b in g and x ~ y in h, loops included on both sides.
inline Product direct_product(const Graph& g, const Graph& h) {
  ProductVertexMap map(g.order(), h.order());
  std::vector<Edge> edges;
  const auto ge = g.edges();
  const auto he = h.edges();
  for (auto [a, b] : ge) {
    for (auto [x, y] : he) {
      // An unordered factor edge pair yields (a,x)(b,y) and (a,y)(b,x); these
      // coincide when either factor edge is a loop.
      edges.push_back(normalized({map.encode(a, x), map.encode(b, y)}));
      if (a != b && x != y) edges.push_back(normalized({map.encode(a, y), map.encode(b, x)}));
    }
  }
  auto graph = Graph::from_edges(map.order(), edges);

  // Ordered adjacent pairs multiply: A = 2m*_g + l_g, B = 2m*_h + l_h, and the
  // product has A*B ordered pairs, of which l_g*l_h are loops.
  const auto arcs_g = 2 * g.link_count() + g.loop_count();
  const auto arcs_h = 2 * h.link_count() + h.loop_count();
  const auto loops = g.loop_count() * h.loop_count();
  if (graph.loop_count() != loops || graph.size() != (arcs_g * arcs_h + loops) / 2)
    throw std::logic_error("direct product edge count mismatch");
  return {std::move(graph), map};
}

// (a,x) ~ (b,y) iff a = b and x ~ y, or a ~ b and x = y. Loopless factors only.
inline Product cartesian_product(const Graph& g, const Graph& h) {
  if (g.loop_count() != 0 || h.loop_count() != 0)
    throw Error("cartesian product is only defined here for loopless factors");
  ProductVertexMap map(g.order(), h.order());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a)
    for (auto [x, y] : h.edges()) edges.emplace_back(map.encode(a, x), map.encode(a, y));
  for (auto [a, b] : g.edges())
    for (Vertex x = 0; x < h.order(); ++x) edges.emplace_back(map.encode(a, x), map.encode(b, x));
  return {Graph::from_edges(map.order(), edges), map};
}

}  // namespace medianprod
