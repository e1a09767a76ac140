#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "medianprod/graph.hpp"

namespace medianprod {

// All-pairs shortest-path lengths. Unreachable pairs are reported as
// std::nullopt; the internal marker never leaves this class.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t order() const noexcept { return n_; }

  std::optional<std::size_t> at(Vertex u, Vertex v) const {
    auto d = d_[u * n_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  bool reachable(Vertex u, Vertex v) const { return d_[u * n_ + v] != kUnreachable; }

  // True when every pair is reachable (vacuously for order() <= 1).
  bool connected() const {
    for (auto d : d_)
      if (d == kUnreachable) return false;
    return true;
  }

  // Caller guarantees reachable(u, v).
  std::size_t unchecked(Vertex u, Vertex v) const { return d_[u * n_ + v]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);

  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

// One breadth-first search per source. Loops are never relaxed.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  const auto n = g.order();
  dm.n_ = n;
  dm.d_.assign(n * n, DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    auto* row = dm.d_.data() + s * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      auto u = queue[head++];
      for (auto v : g.neighbors(u)) {
        if (row[v] == DistanceMatrix::kUnreachable) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  return dm;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.order();
}

// Number of connected components (loops ignored).
inline std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t comps = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

}  // namespace medianprod
