#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "medianprod/graph.hpp"

namespace medianprod {

// Canonical labeling by exhaustive permutation search with prefix pruning.
//
// A graph on n vertices is read as the bitstring of its upper adjacency
// triangle, diagonal included, column by column: (0,0), (0,1), (1,1),
// (0,2), (1,2), (2,2), ... The canonical code is the lexicographically
// smallest such bitstring over all n! relabelings, packed MSB-first into an
// integer. The first c+1 columns depend only on the images of vertices
// 0..c, so partial permutations can be compared and pruned column by column.
namespace canon {

inline constexpr std::size_t kMaxCanonicalOrder = 10;  // 55 bits
inline constexpr std::size_t kMaxEnumerationOrder = 6;

using Rows = std::array<std::uint32_t, kMaxCanonicalOrder>;

inline std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

inline bool bit(const Rows& rows, std::size_t u, std::size_t v) { return ((rows[u] >> v) & 1U) != 0; }

// Column c of the graph relabeled by perm (r = 0 is the most significant bit).
inline std::uint32_t column(const Rows& rows, const std::array<std::uint8_t, kMaxCanonicalOrder>& perm,
                            std::size_t c) {
  std::uint32_t col = 0;
  for (std::size_t r = 0; r <= c; ++r) col = (col << 1) | (bit(rows, perm[r], perm[c]) ? 1U : 0U);
  return col;
}

inline std::uint64_t pack(const std::vector<std::uint32_t>& columns) {
  std::uint64_t code = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) code = (code << (c + 1)) | columns[c];
  return code;
}

class Search {
 public:
  Search(const Rows& rows, std::size_t n) : rows_(rows), n_(n), best_(n, 0) {}

  // Minimal code over all relabelings.
  std::uint64_t minimum() {
    defined_ = 0;
    descend_min(0, 0);
    return pack(best_);
  }

  // True when no relabeling gives a strictly smaller code than the identity.
  bool identity_is_minimal() {
    for (std::size_t c = 0; c < n_; ++c) {
      perm_[c] = static_cast<std::uint8_t>(c);
    }
    for (std::size_t c = 0; c < n_; ++c) best_[c] = column(rows_, perm_, c);
    return !find_smaller(0, 0);
  }

 private:
  void descend_min(std::size_t c, std::uint32_t used) {
    if (c == n_) return;
    for (std::size_t x = 0; x < n_; ++x) {
      if ((used >> x) & 1U) continue;
      perm_[c] = static_cast<std::uint8_t>(x);
      auto col = column(rows_, perm_, c);
      if (c < defined_) {
        if (col > best_[c]) continue;
        if (col < best_[c]) defined_ = c;
      }
      if (c >= defined_) {
        best_[c] = col;
        defined_ = c + 1;
      }
      descend_min(c + 1, used | (1U << x));
    }
  }

  bool find_smaller(std::size_t c, std::uint32_t used) {
    if (c == n_) return false;
    for (std::size_t x = 0; x < n_; ++x) {
      if ((used >> x) & 1U) continue;
      perm_[c] = static_cast<std::uint8_t>(x);
      auto col = column(rows_, perm_, c);
      if (col < best_[c]) return true;
      if (col == best_[c] && find_smaller(c + 1, used | (1U << x))) return true;
    }
    return false;
  }

  Rows rows_;
  std::size_t n_;
  std::vector<std::uint32_t> best_;
  std::size_t defined_ = 0;
  std::array<std::uint8_t, kMaxCanonicalOrder> perm_{};
};

inline Rows rows_of(const Graph& g) {
  Rows rows{};
  for (auto [u, v] : g.edges()) {
    rows[u] |= 1U << v;
    rows[v] |= 1U << u;
  }
  return rows;
}

inline Rows rows_from_code(std::uint64_t code, std::size_t n) {
  Rows rows{};
  auto shift = pair_count(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r <= c; ++r) {
      --shift;
      if ((code >> shift) & 1U) {
        rows[r] |= 1U << c;
        rows[c] |= 1U << r;
      }
    }
  return rows;
}

inline Graph graph_from_rows(const Rows& rows, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r <= c; ++r)
      if (bit(rows, r, c)) edges.emplace_back(r, c);
  return Graph::from_edges(n, edges);
}

inline bool rows_connected(const Rows& rows, std::size_t n) {
  if (n <= 1) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((frontier >> v) & 1U) next |= rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

}  // namespace canon

// Code of g under the identity labeling.
inline std::uint64_t adjacency_code(const Graph& g) {
  if (g.order() > canon::kMaxCanonicalOrder) throw Error("graph too large for adjacency codes");
  auto rows = canon::rows_of(g);
  std::array<std::uint8_t, canon::kMaxCanonicalOrder> id{};
  std::vector<std::uint32_t> cols;
  for (std::size_t c = 0; c < g.order(); ++c) id[c] = static_cast<std::uint8_t>(c);
  for (std::size_t c = 0; c < g.order(); ++c) cols.push_back(canon::column(rows, id, c));
  return canon::pack(cols);
}

// Isomorphism invariant: equal for two graphs iff they are isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > canon::kMaxCanonicalOrder)
    throw Error("canonical codes support at most " + std::to_string(canon::kMaxCanonicalOrder) +
                " vertices");
  return canon::Search(canon::rows_of(g), g.order()).minimum();
}

inline Graph canonical_form(const Graph& g) {
  return canon::graph_from_rows(canon::rows_from_code(canonical_code(g), g.order()), g.order());
}

// Calls `visit` once per isomorphism class of graphs on n vertices (loops
// allowed), with the canonical representative, in increasing code order.
inline void for_each_graph_class(std::size_t n, bool require_connected, bool require_loop,
                                 const std::function<void(const Graph&)>& visit) {
  if (n > canon::kMaxEnumerationOrder)
    throw Error("enumeration is limited to n <= " + std::to_string(canon::kMaxEnumerationOrder));
  const auto bits = canon::pair_count(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    auto rows = canon::rows_from_code(code, n);
    if (require_loop) {
      bool loop = false;
      for (std::size_t v = 0; v < n && !loop; ++v) loop = canon::bit(rows, v, v);
      if (!loop) continue;
    }
    if (require_connected && !canon::rows_connected(rows, n)) continue;
    if (!canon::Search(rows, n).identity_is_minimal()) continue;
    visit(canon::graph_from_rows(rows, n));
  }
}

inline std::vector<Graph> enumerate_loopy_graphs(std::size_t n, bool require_connected,
                                                 bool require_loop) {
  std::vector<Graph> out;
  for_each_graph_class(n, require_connected, require_loop,
                       [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace medianprod
