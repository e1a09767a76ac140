#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "medianprod/distance.hpp"
#include "medianprod/graph.hpp"

namespace medianprod {

// Closed walk v0 ~ v1 ~ ... ~ v_{len-1} ~ v0 of odd length. A single vertex
// stands for its loop.
struct OddCycleWitness {
  std::vector<Vertex> cycle;

  friend bool operator==(const OddCycleWitness&, const OddCycleWitness&) = default;
};

struct Bipartition {
  // color[v] in {0, 1}; no edge joins two vertices of the same color.
  std::vector<unsigned char> color;

  std::array<std::vector<Vertex>, 2> parts() const {
    std::array<std::vector<Vertex>, 2> p;
    for (Vertex v = 0; v < color.size(); ++v) p[color[v]].push_back(v);
    return p;
  }
};

// Empty string when the witness is valid for g, otherwise the reason.
inline std::string check_odd_cycle(const Graph& g, const OddCycleWitness& w) {
  const auto& c = w.cycle;
  if (c.empty() || c.size() % 2 == 0) return "cycle length is not odd";
  for (auto v : c)
    if (v >= g.order()) return "vertex out of range";
  if (c.size() == 1) return g.has_loop(c[0]) ? "" : "single-vertex witness without a loop";
  auto sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return "cycle repeats a vertex";
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto u = c[i], v = c[(i + 1) % c.size()];
    if (!g.adjacent(u, v))
      return "missing edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return "";
}

inline bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  if (b.color.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (b.color[u] == b.color[v]) return false;  // includes loops
  return true;
}

// A loop is reported first (lowest looped vertex). Otherwise BFS two-coloring;
// the first monochromatic edge closes an odd cycle through the BFS tree.
inline std::variant<OddCycleWitness, Bipartition> odd_cycle_or_bipartition(const Graph& g) {
  const auto n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (g.has_loop(v)) return OddCycleWitness{{v}};

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, kNone);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (depth[s] != kNone) continue;
    depth[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto v : g.neighbors(u)) {
        if (depth[v] == kNone) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (depth[v] == depth[u]) {
          // Climb both endpoints to their lowest common ancestor.
          std::vector<Vertex> left{u}, right{v};
          auto a = u, b = v;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();  // LCA already in left
          OddCycleWitness w;
          w.cycle = std::move(left);
          w.cycle.insert(w.cycle.end(), right.rbegin(), right.rend());
          return w;
        }
      }
    }
  }
  Bipartition b;
  b.color.resize(n);
  for (Vertex v = 0; v < n; ++v) b.color[v] = static_cast<unsigned char>(depth[v] % 2);
  return b;
}

inline bool is_bipartite(const Graph& g) {
  return std::holds_alternative<Bipartition>(odd_cycle_or_bipartition(g));
}

// Two vertices joined to each of three others (not necessarily induced).
struct K23Embedding {
  std::array<Vertex, 2> pair;
  std::array<Vertex, 3> triple;

  friend bool operator==(const K23Embedding&, const K23Embedding&) = default;
};

inline std::string check_k23(const Graph& g, const K23Embedding& e) {
  std::array<Vertex, 5> all{e.pair[0], e.pair[1], e.triple[0], e.triple[1], e.triple[2]};
  for (auto v : all)
    if (v >= g.order()) return "vertex out of range";
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "vertices are not distinct";
  for (auto a : e.pair)
    for (auto c : e.triple)
      if (!g.adjacent(a, c))
        return "missing edge (" + std::to_string(a) + "," + std::to_string(c) + ")";
  return "";
}

// Scans unordered pairs {a < b} in index order and returns the first pair whose
// common open neighborhood has at least three vertices (its three smallest).
inline std::optional<K23Embedding> contains_k23_subgraph(const Graph& g) {
  const auto n = g.order();
  std::vector<VertexSet> open;
  open.reserve(n);
  for (Vertex v = 0; v < n; ++v) open.push_back(g.open_neighborhood(v));
  for (Vertex a = 0; a < n; ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.degree(b) < 3) continue;
      auto common = open[a] & open[b];
      common.erase(a);
      common.erase(b);
      if (common.size() < 3) continue;
      auto vs = common.to_vector();
      K23Embedding e{{a, b}, {vs[0], vs[1], vs[2]}};
      if (!check_k23(g, e).empty()) throw std::logic_error("k23 detector produced invalid embedding");
      return e;
    }
  }
  return std::nullopt;
}

// Induced subgraph on `sub` preserves every pairwise distance of g.
inline bool is_isometric_subgraph(const VertexSet& sub, const Graph& g) {
  auto keep = sub.to_vector();
  auto inner = all_pairs_distances(induced_subgraph(g, keep));
  auto outer = all_pairs_distances(g);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (inner.at(i, j) != outer.at(keep[i], keep[j])) return false;
  return true;
}

// Edge-subgraph form: `sub` is a graph on the same vertex indices whose edges
// are all edges of g; only the vertices it touches (or any vertex, if
// `vertices` is given) are compared.
inline bool is_isometric_subgraph(const Graph& sub, const Graph& g, const VertexSet& vertices) {
  if (sub.order() != g.order()) throw Error("edge subgraph must share the host's vertex indices");
  for (auto [u, v] : sub.edges())
    if (!g.adjacent(u, v)) throw Error("edge subgraph has an edge missing from the host");
  auto inner = all_pairs_distances(sub);
  auto outer = all_pairs_distances(g);
  auto vs = vertices.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (inner.at(vs[i], vs[j]) != outer.at(vs[i], vs[j])) return false;
  return true;
}

// Induced subgraph is connected and contains every interval I(u,v) of g.
inline bool is_convex_subgraph(const VertexSet& sub, const Graph& g) {
  auto keep = sub.to_vector();
  if (!is_connected(induced_subgraph(g, keep))) return false;
  auto d = all_pairs_distances(g);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      auto u = keep[i], v = keep[j];
      auto duv = d.unchecked(u, v);
      for (Vertex w = 0; w < g.order(); ++w) {
        if (sub.contains(w) || !d.reachable(u, w)) continue;
        if (d.unchecked(u, w) + d.unchecked(w, v) == duv) return false;
      }
    }
  return true;
}

}  // namespace medianprod
