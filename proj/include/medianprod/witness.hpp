#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "medianprod/describe.hpp"
#include "medianprod/median.hpp"
#include "medianprod/patterns.hpp"
#include "medianprod/products.hpp"
#include "medianprod/structure.hpp"

namespace medianprod {

// Small instances certifying each non-median (or median) case of the
// classification. Every bundle carries the factors, the product and a
// certificate that check_witness() re-derives from the product alone.
using Certificate = std::variant<OddCycleWitness, K23Embedding, BadTriple, MedianVerdict>;

struct WitnessBundle {
  std::string id;
  std::string summary;
  Graph g;
  Graph h;
  Product product;
  Certificate certificate;
  // For MedianVerdict certificates: the verdict the instance is expected to get.
  bool claims_median = false;
};

struct WitnessOptions {
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
};

inline constexpr std::array<std::string_view, 10> kWitnessIds = {
    "two-loops-adjacent", "odd-cycle-lift", "dk-double-median", "h2-k23",     "h3-no-median",
    "hpk-paths",          "h1-k23",         "star-k23",         "cycle-case", "munarini-boundary",
};

namespace detail {

inline std::size_t param_or(const std::optional<std::size_t>& p, std::size_t fallback) {
  return p ? *p : fallback;
}

inline void reject_params(std::string_view id, const WitnessOptions& opt, bool k_ok, bool l_ok) {
  if (opt.k && !k_ok) throw Error("witness " + std::string(id) + " takes no --k parameter");
  if (opt.l && !l_ok) throw Error("witness " + std::string(id) + " takes no --l parameter");
}

inline WitnessBundle bundle(std::string id, std::string summary, Graph g, Graph h) {
  auto p = direct_product(g, h);
  return {std::move(id), std::move(summary), std::move(g), std::move(h), std::move(p), MedianVerdict{}, false};
}

}  // namespace detail

// Labels used below: G = P_3 has v1, v2, v3 at 0, 1, 2; factor vertices of
// the H patterns follow make_pattern's numbering (x_i at i-1; x, y, z at
// 0, 1, 2).
inline WitnessBundle make_witness(std::string_view id, const WitnessOptions& opt = {}) {
  using detail::bundle;
  using detail::param_or;
  using detail::reject_params;
  const auto P3 = [] { return make_pattern(PatternKind::Path, 3); };

  if (id == "two-loops-adjacent") {
    reject_params(id, opt, false, false);
    // u=0 (loop) ~ v=1 in G, x=0 (loop) ~ y=1 in H.
    auto b = bundle(std::string(id), "loops in both factors give the triangle (u,x),(v,x),(u,y)",
                    make_pattern(PatternKind::E, 2), make_pattern(PatternKind::E, 2));
    const auto& m = b.product.map;
    b.certificate = OddCycleWitness{{m.encode(0, 0), m.encode(1, 0), m.encode(0, 1)}};
    return b;
  }
  if (id == "odd-cycle-lift") {
    reject_params(id, opt, true, true);
    const auto k = param_or(opt.k, 3);
    const auto l = param_or(opt.l, 2);
    if (k < 3 || k % 2 == 0) throw Error("odd-cycle-lift needs an odd cycle length k >= 3");
    auto b = bundle(std::string(id), "an odd cycle of G lifts through the loop vertex x of H",
                    make_pattern(PatternKind::Cycle, k), make_pattern(PatternKind::E, l));
    OddCycleWitness w;
    for (Vertex i = 0; i < k; ++i) w.cycle.push_back(b.product.map.encode(i, 0));
    b.certificate = w;
    return b;
  }
  if (id == "dk-double-median") {
    reject_params(id, opt, true, false);
    const auto k = param_or(opt.k, 3);
    auto b = bundle(std::string(id), "(v1,x1) and (v3,x1) are both medians of (v2,x1),(v2,x2),(v2,xk)",
                    P3(), make_pattern(PatternKind::D, k));
    const auto& m = b.product.map;
    b.certificate = BadTriple{{m.encode(1, 0), m.encode(1, 1), m.encode(1, k - 1)},
                              {m.encode(0, 0), m.encode(2, 0)}};
    return b;
  }
  if (id == "h2-k23" || id == "h1-k23" || id == "star-k23") {
    reject_params(id, opt, false, false);
    if (id == "h2-k23") {
      auto b = bundle(std::string(id), "P3 x H2 contains K23", P3(), make_pattern(PatternKind::H2));
      auto e = contains_k23_subgraph(b.product.graph);
      if (!e) throw std::logic_error("P3 x H2 has no K23");
      b.certificate = *e;
      return b;
    }
    if (id == "h1-k23") {
      auto b = bundle(std::string(id), "(v1,y),(v3,y) against (v2,x),(v2,y),(v2,z) is K23", P3(),
                      make_pattern(PatternKind::H1));
      const auto& m = b.product.map;
      b.certificate = K23Embedding{{m.encode(0, 1), m.encode(2, 1)},
                                   {m.encode(1, 0), m.encode(1, 1), m.encode(1, 2)}};
      return b;
    }
    // H = S_3 (center x1 = 0, leaves x2..x4 = 1..3) with a loop on x2, so H
    // contains E_3 = x2 x1 x3.
    auto h = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 1}});
    auto b = bundle(std::string(id), "(v1,x1),(v3,x1) against (v2,x2),(v2,x3),(v2,x4) is K23", P3(), h);
    const auto& m = b.product.map;
    b.certificate = K23Embedding{{m.encode(0, 0), m.encode(2, 0)},
                                 {m.encode(1, 1), m.encode(1, 2), m.encode(1, 3)}};
    return b;
  }
  if (id == "h3-no-median") {
    reject_params(id, opt, false, false);
    auto b = bundle(std::string(id), "(v1,x),(v3,y),(v1,z) has no median in P3 x H3", P3(),
                    make_pattern(PatternKind::H3));
    const auto& m = b.product.map;
    b.certificate = BadTriple{{m.encode(0, 0), m.encode(2, 1), m.encode(0, 2)}, {}};
    return b;
  }
  if (id == "hpk-paths") {
    reject_params(id, opt, true, false);
    const auto k = param_or(opt.k, 4);
    auto b = bundle(std::string(id), "", P3(), make_pattern(PatternKind::HPrime, k));
    const auto& m = b.product.map;
    // Even k: triple starts at (v1,x1). Odd k: at (v2,x1), where the
    // (v1,x1) triple has a unique median.
    const Vertex start = k % 2 == 0 ? m.encode(0, 0) : m.encode(1, 0);
    b.summary = std::string(k % 2 == 0 ? "even" : "odd") +
                " k: (v2,x_{k-1}) and (v2,x_k) both median the triple";
    b.certificate = BadTriple{{start, m.encode(0, k - 1), m.encode(2, k - 1)},
                              {m.encode(1, k - 2), m.encode(1, k - 1)}};
    return b;
  }
  if (id == "cycle-case") {
    reject_params(id, opt, true, true);
    const auto k = param_or(opt.k, 4);
    const auto l = param_or(opt.l, 3);
    if (l < 3) throw Error("cycle-case needs l >= 3 so that H contains E_3");
    auto b = bundle(std::string(id), "C_k x E_l checked by brute force", make_pattern(PatternKind::Cycle, k),
                    make_pattern(PatternKind::E, l));
    b.certificate = median_check(b.product.graph);
    b.claims_median = false;
    return b;
  }
  if (id == "munarini-boundary") {
    reject_params(id, opt, false, false);
    auto b = bundle(std::string(id), "P2 x T2 is the 4-cycle, a median graph",
                    make_pattern(PatternKind::Path, 2), make_pattern(PatternKind::Total, 2));
    b.certificate = median_check(b.product.graph);
    b.claims_median = true;
    return b;
  }
  throw Error("unknown witness id '" + std::string(id) + "'");
}

// Empty when the certificate holds for the bundle's product.
inline std::string check_witness(const WitnessBundle& b) {
  auto fresh = direct_product(b.g, b.h);
  if (!(fresh.graph == b.product.graph)) return "product does not match its factors";
  const auto& g = b.product.graph;
  return std::visit(
      [&](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, OddCycleWitness>) {
          return check_odd_cycle(g, c);
        } else if constexpr (std::is_same_v<T, K23Embedding>) {
          return check_k23(g, c);
        } else if constexpr (std::is_same_v<T, BadTriple>) {
          return check_bad_triple(g, c);
        } else {
          if (c.is_median() != b.claims_median) return "verdict differs from the claim";
          return check_verdict(g, c);
        }
      },
      b.certificate);
}

inline std::string describe(const WitnessBundle& b) {
  std::ostringstream out;
  auto name = pair_names(b.product.map);
  out << "witness " << b.id << '\n';
  out << "claim " << b.summary << '\n';
  out << "G order=" << b.g.order() << " edges=" << b.g.size() << " loops=" << b.g.loop_count() << '\n';
  out << "H order=" << b.h.order() << " edges=" << b.h.size() << " loops=" << b.h.loop_count() << '\n';
  out << "product order=" << b.product.graph.order() << " edges=" << b.product.graph.size() << '\n';
  out << "certificate "
      << std::visit([&](const auto& c) { return describe(c, name); }, b.certificate)
      << '\n';
  auto err = check_witness(b);
  out << "status " << (err.empty() ? "VALID" : "INVALID " + err) << '\n';
  return out.str();
}

}  // namespace medianprod
