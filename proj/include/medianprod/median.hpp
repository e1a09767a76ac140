#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "medianprod/distance.hpp"
#include "medianprod/graph.hpp"
#include "medianprod/structure.hpp"

namespace medianprod {

// I(u,v) = { w : d(u,w) + d(w,v) = d(u,v) }. Throws if u and v lie in
// different components.
inline VertexSet interval(Vertex u, Vertex v, const DistanceMatrix& d) {
  if (!d.reachable(u, v))
    throw Error("interval of vertices " + std::to_string(u) + " and " + std::to_string(v) +
                " in different components");
  VertexSet s(d.order());
  const auto duv = d.unchecked(u, v);
  for (Vertex w = 0; w < d.order(); ++w)
    if (d.reachable(u, w) && d.unchecked(u, w) + d.unchecked(w, v) == duv) s.insert(w);
  return s;
}

inline VertexSet median_set(Vertex u, Vertex v, Vertex w, const DistanceMatrix& d) {
  return interval(u, v, d) & interval(v, w, d) & interval(u, w, d);
}

struct NotConnected {
  // Some vertex unreachable from vertex 0.
  Vertex unreachable;
  friend bool operator==(const NotConnected&, const NotConnected&) = default;
};
struct HasLoop {
  Vertex vertex;
  friend bool operator==(const HasLoop&, const HasLoop&) = default;
};
struct BadTriple {
  std::array<Vertex, 3> triple;
  std::vector<Vertex> medians;  // ascending; size != 1
  friend bool operator==(const BadTriple&, const BadTriple&) = default;
};

using MedianWitness = std::variant<NotConnected, HasLoop, OddCycleWitness, BadTriple>;

struct MedianVerdict {
  // Empty when the graph is median.
  std::optional<MedianWitness> witness;

  bool is_median() const noexcept { return !witness.has_value(); }
  friend bool operator==(const MedianVerdict&, const MedianVerdict&) = default;
};

namespace detail {

// Interval bitsets for all ordered pairs of a connected graph.
class IntervalTable {
 public:
  explicit IntervalTable(const DistanceMatrix& d) : n_(d.order()), sets_(n_ * n_) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u; v < n_; ++v) {
        sets_[u * n_ + v] = interval(u, v, d);
        sets_[v * n_ + u] = sets_[u * n_ + v];
      }
  }
  const VertexSet& operator()(Vertex u, Vertex v) const { return sets_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<VertexSet> sets_;
};

}  // namespace detail

// Brute-force median test. Order of checks: connectivity, loops, then every
// triple u < v < w in lexicographic order; the first failing triple is the
// witness. Graphs with at most two vertices pass the triple stage trivially.
inline MedianVerdict median_check(const Graph& g) {
  const auto n = g.order();
  const auto d = all_pairs_distances(g);
  for (Vertex v = 1; v < n; ++v)
    if (!d.reachable(0, v)) return {NotConnected{v}};
  for (Vertex v = 0; v < n; ++v)
    if (g.has_loop(v)) return {HasLoop{v}};
  if (n < 3) return {};

  const detail::IntervalTable iv(d);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) {
        if (intersection_size(iv(u, v), iv(v, w), iv(u, w)) == 1) continue;
        auto m = iv(u, v) & iv(v, w) & iv(u, w);
        return {BadTriple{{u, v, w}, m.to_vector()}};
      }
  return {};
}

inline bool is_median_graph(const Graph& g) { return median_check(g).is_median(); }

// Re-derives a bad triple from scratch: fresh distances, fresh intervals.
inline std::string check_bad_triple(const Graph& g, const BadTriple& t) {
  for (auto v : t.triple)
    if (v >= g.order()) return "triple vertex out of range";
  auto d = all_pairs_distances(g);
  auto [u, v, w] = t.triple;
  if (!d.reachable(u, v) || !d.reachable(v, w)) return "triple spans components";
  auto m = median_set(u, v, w, d).to_vector();
  if (m != t.medians) return "recorded median set differs from recomputed one";
  if (m.size() == 1) return "median set has exactly one vertex";
  return "";
}

// Empty string when the verdict is correct for g. A MEDIAN verdict is
// re-checked in full (connected, loopless, bipartite, all triples unique).
inline std::string check_verdict(const Graph& g, const MedianVerdict& verdict) {
  if (verdict.is_median()) {
    if (!is_connected(g)) return "median verdict for a disconnected graph";
    if (g.loop_count() != 0) return "median verdict for a graph with a loop";
    if (!is_bipartite(g)) return "median verdict for a non-bipartite graph";
    auto d = all_pairs_distances(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        for (Vertex w = v + 1; w < g.order(); ++w)
          if (median_set(u, v, w, d).size() != 1) return "median verdict but a triple fails";
    return "";
  }
  return std::visit(
      [&](const auto& w) -> std::string {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, NotConnected>) {
          if (w.unreachable >= g.order()) return "vertex out of range";
          return all_pairs_distances(g).reachable(0, w.unreachable)
                     ? "claimed unreachable vertex is reachable"
                     : "";
        } else if constexpr (std::is_same_v<T, HasLoop>) {
          return w.vertex < g.order() && g.has_loop(w.vertex) ? "" : "claimed loop is absent";
        } else if constexpr (std::is_same_v<T, OddCycleWitness>) {
          return check_odd_cycle(g, w);
        } else {
          return check_bad_triple(g, w);
        }
      },
      *verdict.witness);
}

}  // namespace medianprod
