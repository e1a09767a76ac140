#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <variant>

#include "medianprod/median.hpp"
#include "medianprod/products.hpp"
#include "medianprod/structure.hpp"

namespace medianprod {

using VertexName = std::function<std::string(Vertex)>;

inline VertexName plain_names() {
  return [](Vertex v) { return std::to_string(v); };
}

// "(a,x)" for product vertices.
inline VertexName pair_names(const ProductVertexMap& map) {
  return [map](Vertex v) {
    auto [a, x] = map.decode(v);
    return "(" + std::to_string(a) + "," + std::to_string(x) + ")";
  };
}

template <typename Range>
std::string join_names(const Range& vs, const VertexName& name, const char* sep = " ") {
  std::string s;
  bool first = true;
  for (auto v : vs) {
    if (!first) s += sep;
    s += name(v);
    first = false;
  }
  return s;
}

inline std::string describe(const OddCycleWitness& w, const VertexName& name) {
  return "ODD_CYCLE length=" + std::to_string(w.cycle.size()) + " [" + join_names(w.cycle, name) + "]";
}

inline std::string describe(const K23Embedding& e, const VertexName& name) {
  return "K23 {" + join_names(e.pair, name) + "} x {" + join_names(e.triple, name) + "}";
}

inline std::string describe(const BadTriple& t, const VertexName& name) {
  return "BAD_TRIPLE " + join_names(t.triple, name) + " medians={" + join_names(t.medians, name, " ") +
         "} size=" + std::to_string(t.medians.size());
}

inline std::string describe(const MedianVerdict& verdict, const VertexName& name = plain_names()) {
  if (verdict.is_median()) return "MEDIAN";
  return "NOT_MEDIAN " +
         std::visit(
             [&](const auto& w) -> std::string {
               using T = std::decay_t<decltype(w)>;
               if constexpr (std::is_same_v<T, NotConnected>)
                 return "NOT_CONNECTED unreachable=" + name(w.unreachable);
               else if constexpr (std::is_same_v<T, HasLoop>)
                 return "HAS_LOOP vertex=" + name(w.vertex);
               else
                 return describe(w, name);
             },
             *verdict.witness);
}

}  // namespace medianprod
