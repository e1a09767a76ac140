#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "medianprod/error.hpp"
#include "medianprod/vertex_set.hpp"

namespace medianprod {

// Undirected edge, normalized so that first <= second. (v, v) is a loop.
using Edge = std::pair<Vertex, Vertex>;

inline Edge normalized(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

// Finite undirected graph on vertices 0..order()-1 with at most one loop per
// vertex and no parallel edges. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws Error on an out-of-range endpoint or a duplicate edge ((u,v) and
  // (v,u) are the same edge).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& raw : edges) {
      auto [u, v] = normalized(raw);
      if (v >= n)
        throw Error("edge (" + std::to_string(raw.first) + "," + std::to_string(raw.second) +
                    ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      if (g.rows_[u].contains(v))
        throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.rows_[u].insert(v);
      g.rows_[v].insert(u);
      if (u == v) {
        g.loops_.insert(u);
        ++g.loop_count_;
      } else {
        g.nbrs_[u].push_back(v);
        g.nbrs_[v].push_back(u);
        ++g.link_count_;
      }
    }
    for (auto& l : g.nbrs_) std::sort(l.begin(), l.end());
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  // Edges including loops.
  std::size_t size() const noexcept { return link_count_ + loop_count_; }
  // Non-loop edges.
  std::size_t link_count() const noexcept { return link_count_; }
  std::size_t loop_count() const noexcept { return loop_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  bool has_loop(Vertex v) const { return loops_.contains(v); }
  const VertexSet& loop_vertices() const noexcept { return loops_; }

  // Neighbors other than v itself, ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }
  // Neighborhood with v removed even when v has a loop.
  VertexSet open_neighborhood(Vertex v) const {
    VertexSet s = rows_[v];
    s.erase(v);
    return s;
  }
  // Adjacency row, includes v when v has a loop.
  const VertexSet& row(Vertex v) const { return rows_[v]; }

  // Sorted lexicographically, each edge normalized.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < n_; ++u)
      rows_[u].for_each([&](Vertex v) {
        if (v >= u) out.emplace_back(u, v);
      });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  explicit Graph(std::size_t n)
      : n_(n), rows_(n, VertexSet(n)), nbrs_(n), loops_(n) {}

  std::size_t n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> nbrs_;
  VertexSet loops_;
  std::size_t link_count_ = 0;
  std::size_t loop_count_ = 0;
};

// Induced subgraph on `keep`; vertex i of the result is keep[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<std::size_t> pos(g.order(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (pos[u] < keep.size() && pos[v] < keep.size()) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(keep.size(), edges);
}

// Relabels vertex v as perm[v].
inline Graph relabeled(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

inline Graph without_loops(const Graph& g) {
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (e.first != e.second) edges.push_back(e);
  return Graph::from_edges(g.order(), edges);
}

// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

}  // namespace medianprod
