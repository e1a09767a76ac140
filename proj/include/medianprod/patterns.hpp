#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "medianprod/distance.hpp"
#include "medianprod/graph.hpp"

namespace medianprod {

// Named graph families. Vertex labels used throughout:
//   P_k   path 0-1-...-(k-1)                          k >= 1
//   C_k   cycle 0-1-...-(k-1)-0                       k >= 3
//   S_k   star, center 0, leaves 1..k                 k >= 1
//   K23   sides {0,1} and {2,3,4}
//   T_n   complete graph with a loop at every vertex  n >= 1
//   H1    x=0, y=1, z=2: x-y, y-z, loop at y
//   H2    x=0, y=1: x-y, loops at both
//   H3    x=0, y=1, z=2: x-y, y-z, loops at x and z
//   H'_k  x_i = i-1: path, loops at x_1 and x_k        k >= 4
//   D_k   x_i = i-1: cycle, loop at x_1                k >= 3
//   E_k   x_i = i-1: path, loop at x_1                 k >= 2
enum class PatternKind { Path, Cycle, Star, K23, Total, H1, H2, H3, HPrime, D, E };

struct PatternSpec {
  PatternKind kind;
  std::size_t param = 0;  // ignored for K23, H1, H2, H3
};

namespace detail {

inline std::vector<Edge> path_edges(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return e;
}

inline void require(bool ok, const char* family, std::size_t p, const char* range) {
  if (!ok) throw Error(std::string(family) + " parameter " + std::to_string(p) + " outside " + range);
}

}  // namespace detail

inline Graph make_pattern(PatternKind kind, std::size_t k = 0) {
  using detail::path_edges;
  using detail::require;
  std::vector<Edge> e;
  switch (kind) {
    case PatternKind::Path:
      require(k >= 1, "P", k, "k >= 1");
      return Graph::from_edges(k, path_edges(k));
    case PatternKind::Cycle:
      require(k >= 3, "C", k, "k >= 3");
      e = path_edges(k);
      e.emplace_back(k - 1, 0);
      return Graph::from_edges(k, e);
    case PatternKind::Star:
      require(k >= 1, "S", k, "k >= 1");
      for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
      return Graph::from_edges(k + 1, e);
    case PatternKind::K23:
      for (Vertex a : {0, 1})
        for (Vertex c : {2, 3, 4}) e.emplace_back(a, c);
      return Graph::from_edges(5, e);
    case PatternKind::Total:
      require(k >= 1, "T", k, "n >= 1");
      for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u; v < k; ++v) e.emplace_back(u, v);
      return Graph::from_edges(k, e);
    case PatternKind::H1:
      return Graph::from_edges(3, {{0, 1}, {1, 1}, {1, 2}});
    case PatternKind::H2:
      return Graph::from_edges(2, {{0, 0}, {0, 1}, {1, 1}});
    case PatternKind::H3:
      return Graph::from_edges(3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
    case PatternKind::HPrime:
      require(k >= 4, "H'", k, "k >= 4");
      e = path_edges(k);
      e.emplace_back(0, 0);
      e.emplace_back(k - 1, k - 1);
      return Graph::from_edges(k, e);
    case PatternKind::D:
      require(k >= 3, "D", k, "k >= 3");
      e = path_edges(k);
      e.emplace_back(0, 0);
      e.emplace_back(k - 1, 0);
      return Graph::from_edges(k, e);
    case PatternKind::E:
      require(k >= 2, "E", k, "k >= 2");
      e = path_edges(k);
      e.emplace_back(0, 0);
      return Graph::from_edges(k, e);
  }
  throw Error("unknown pattern kind");
}

inline Graph make_pattern(const PatternSpec& spec) { return make_pattern(spec.kind, spec.param); }

// Parses `P:k`, `C:k`, `S:k`, `K23`, `T:n`, `H1`, `H2`, `H3`, `Hp:k`, `D:k`, `E:k`.
inline PatternSpec parse_pattern(std::string_view text) {
  auto colon = text.find(':');
  auto name = text.substr(0, colon);
  struct Entry {
    std::string_view name;
    PatternKind kind;
    bool takes_param;
  };
  static constexpr Entry table[] = {
      {"P", PatternKind::Path, true},   {"C", PatternKind::Cycle, true},
      {"S", PatternKind::Star, true},   {"K23", PatternKind::K23, false},
      {"T", PatternKind::Total, true},  {"H1", PatternKind::H1, false},
      {"H2", PatternKind::H2, false},   {"H3", PatternKind::H3, false},
      {"Hp", PatternKind::HPrime, true}, {"D", PatternKind::D, true},
      {"E", PatternKind::E, true},
  };
  for (const auto& entry : table) {
    if (entry.name != name) continue;
    if (!entry.takes_param) {
      if (colon != std::string_view::npos)
        throw Error("pattern " + std::string(name) + " takes no parameter");
      return {entry.kind, 0};
    }
    if (colon == std::string_view::npos)
      throw Error("pattern " + std::string(name) + " needs a parameter, e.g. " +
                  std::string(name) + ":4");
    auto digits = text.substr(colon + 1);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw Error("bad pattern parameter '" + std::string(digits) + "'");
    return {entry.kind, k};
  }
  throw Error("unknown pattern '" + std::string(text) + "'");
}

// Some k when g is the path P_k: connected, loopless, a tree, max degree 2.
inline std::optional<std::size_t> recognize_path(const Graph& g) {
  const auto n = g.order();
  if (n == 0 || g.loop_count() != 0 || g.link_count() != n - 1 || !is_connected(g))
    return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return std::nullopt;
  return n;
}

// Some l >= 2 when g is E_l: one loop, on an end vertex of a path.
inline std::optional<std::size_t> recognize_end_loop_path(const Graph& g) {
  if (g.loop_count() != 1 || g.order() < 2) return std::nullopt;
  auto l = recognize_path(without_loops(g));
  if (!l) return std::nullopt;
  auto v = g.loop_vertices().to_vector().front();
  if (g.degree(v) != 1) return std::nullopt;
  return l;
}

// A pair of loop vertices and the distance between them.
struct LoopPair {
  Vertex u, v;
  std::size_t distance;
  friend bool operator==(const LoopPair&, const LoopPair&) = default;
};

struct Features {
  std::size_t loop_count = 0;
  std::vector<Vertex> loop_vertices;
  bool has_s3 = false;     // underlying simple graph has a vertex of degree >= 3
  bool has_cycle = false;  // underlying simple graph has a cycle
  // H_1 as a subgraph: a loop vertex with two distinct non-loop neighbors.
  std::vector<Vertex> h1_centers;
  // H_2: loop vertices at distance 1.
  std::vector<LoopPair> h2_pairs;
  // H_3 (isometric): loop vertices at distance exactly 2.
  std::vector<LoopPair> h3_pairs;
  // H'_k (isometric): loop vertices at finite distance >= 3, k = distance + 1.
  std::vector<LoopPair> hprime_pairs;
  // D_k for some k: a loop vertex lying on a cycle.
  std::vector<Vertex> dk_vertices;

  bool contains_h1() const { return !h1_centers.empty(); }
  bool contains_h2() const { return !h2_pairs.empty(); }
  bool contains_h3() const { return !h3_pairs.empty(); }
  bool contains_hprime() const { return !hprime_pairs.empty(); }
  bool contains_dk() const { return !dk_vertices.empty(); }
};

namespace detail {

// v lies on a cycle iff two of its neighbors stay connected once v is removed.
inline bool on_cycle(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  if (nb.size() < 2) return false;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), kUnseen);
  comp[v] = g.order();
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (comp[nb[i]] != kUnseen) return true;
    comp[nb[i]] = i;
    std::vector<Vertex> stack{nb[i]};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(u))
        if (comp[w] == kUnseen) {
          comp[w] = i;
          stack.push_back(w);
        }
    }
  }
  return false;
}

}  // namespace detail

inline Features detect_features(const Graph& g) {
  Features f;
  f.loop_count = g.loop_count();
  f.loop_vertices = g.loop_vertices().to_vector();
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) f.has_s3 = true;
  f.has_cycle = g.link_count() + component_count(g) > g.order();

  auto d = all_pairs_distances(g);
  for (std::size_t i = 0; i < f.loop_vertices.size(); ++i) {
    auto u = f.loop_vertices[i];
    if (g.degree(u) >= 2) f.h1_centers.push_back(u);
    if (detail::on_cycle(g, u)) f.dk_vertices.push_back(u);
    for (std::size_t j = i + 1; j < f.loop_vertices.size(); ++j) {
      auto v = f.loop_vertices[j];
      auto dist = d.at(u, v);
      if (!dist) continue;
      LoopPair p{u, v, *dist};
      if (*dist == 1)
        f.h2_pairs.push_back(p);
      else if (*dist == 2)
        f.h3_pairs.push_back(p);
      else
        f.hprime_pairs.push_back(p);
    }
  }
  return f;
}

enum class NonMedianReason {
  GHasLoop,       // loops in both factors force a triangle
  HTwoLoops,      // H has more than one loop
  LoopNotAtEnd,   // H contains H_1
  BranchVertex,   // S_3 in G or H
  Cycle,          // a cycle in G or H
  NotPathPair,    // fallback
};

inline std::string_view to_string(NonMedianReason r) {
  switch (r) {
    case NonMedianReason::GHasLoop: return "G_HAS_LOOP";
    case NonMedianReason::HTwoLoops: return "H_TWO_LOOPS";
    case NonMedianReason::LoopNotAtEnd: return "LOOP_NOT_AT_END";
    case NonMedianReason::BranchVertex: return "BRANCH_VERTEX";
    case NonMedianReason::Cycle: return "CYCLE";
    case NonMedianReason::NotPathPair: return "NOT_PATH_PAIR";
  }
  return "?";
}

struct MedianPrediction {
  std::size_t k;  // G = P_k
  std::size_t l;  // H = E_l
  friend bool operator==(const MedianPrediction&, const MedianPrediction&) = default;
};

struct OutOfScope {
  friend bool operator==(const OutOfScope&, const OutOfScope&) = default;
};

struct ClassificationVerdict {
  std::variant<OutOfScope, MedianPrediction, NonMedianReason> prediction;

  bool in_scope() const { return !std::holds_alternative<OutOfScope>(prediction); }
  bool predicts_median() const { return std::holds_alternative<MedianPrediction>(prediction); }

  std::string to_string() const {
    if (auto* m = std::get_if<MedianPrediction>(&prediction))
      return "MEDIAN k=" + std::to_string(m->k) + " l=" + std::to_string(m->l);
    if (auto* r = std::get_if<NonMedianReason>(&prediction))
      return "NOT_MEDIAN reason=" + std::string(medianprod::to_string(*r));
    return "OUT_OF_SCOPE";
  }
  friend bool operator==(const ClassificationVerdict&, const ClassificationVerdict&) = default;
};

// G: connected, and at least three vertices or (at least two vertices and a loop).
// H: connected, at least two vertices, at least one loop.
inline bool in_theorem_scope(const Graph& g, const Graph& h) {
  const bool g_ok = is_connected(g) && (g.order() >= 3 || (g.order() >= 2 && g.loop_count() > 0));
  const bool h_ok = is_connected(h) && h.order() >= 2 && h.loop_count() > 0;
  return g_ok && h_ok;
}

// Predicts whether the direct product g x h is median. Median exactly for
// (P_k, E_l) with k >= 3, l >= 2; otherwise the first applicable reason.
inline ClassificationVerdict classify(const Graph& g, const Graph& h) {
  if (!in_theorem_scope(g, h)) return {OutOfScope{}};
  auto k = recognize_path(g);
  auto l = recognize_end_loop_path(h);
  if (k && *k >= 3 && l && *l >= 2) return {MedianPrediction{*k, *l}};

  const auto fg = detect_features(g);
  const auto fh = detect_features(h);
  if (fg.loop_count > 0) return {NonMedianReason::GHasLoop};
  if (fh.loop_count > 1) return {NonMedianReason::HTwoLoops};
  if (fh.contains_h1()) return {NonMedianReason::LoopNotAtEnd};
  if (fg.has_s3 || fh.has_s3) return {NonMedianReason::BranchVertex};
  if (fg.has_cycle || fh.has_cycle) return {NonMedianReason::Cycle};
  return {NonMedianReason::NotPathPair};
}

}  // namespace medianprod
