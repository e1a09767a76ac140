#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "medianprod/describe.hpp"
#include "medianprod/enumerate.hpp"
#include "medianprod/io.hpp"
#include "medianprod/median.hpp"
#include "medianprod/patterns.hpp"
#include "medianprod/products.hpp"
#include "medianprod/structure.hpp"

namespace medianprod {

inline constexpr std::size_t kMaxVerifyOrder = 5;

struct PairRecord {
  Graph g;
  Graph h;
  ClassificationVerdict predicted;
  MedianVerdict oracle;
};

struct EnumerationReport {
  std::size_t max_g = 0;
  std::size_t max_h = 0;
  std::size_t pairs_checked = 0;
  std::size_t in_scope_count = 0;
  std::size_t out_of_scope_count = 0;
  std::size_t median_in_scope = 0;
  std::vector<PairRecord> discrepancies;
  std::vector<PairRecord> out_of_scope;
  // Meta-invariant failures: MEDIAN but non-bipartite, MEDIAN with a K23,
  // MEDIAN with loops in both factors, or a verdict that fails re-validation.
  std::vector<std::string> invariant_violations;
  double runtime_seconds = 0.0;

  bool confirmed() const { return discrepancies.empty() && invariant_violations.empty(); }
};

namespace detail {

struct PairOutcome {
  ClassificationVerdict predicted;
  MedianVerdict oracle;
  std::string violation;
};

inline PairOutcome evaluate_pair(const Graph& g, const Graph& h) {
  PairOutcome out{classify(g, h), {}, {}};
  auto product = direct_product(g, h);
  out.oracle = median_check(product.graph);
  if (auto err = check_verdict(product.graph, out.oracle); !err.empty()) {
    out.violation = "verdict re-validation failed: " + err;
  } else if (out.oracle.is_median()) {
    if (!is_bipartite(product.graph))
      out.violation = "median product is not bipartite";
    else if (contains_k23_subgraph(product.graph))
      out.violation = "median product contains K23";
    else if (g.loop_count() > 0 && h.loop_count() > 0)
      out.violation = "median product of two factors with loops";
  }
  return out;
}

inline std::vector<Graph> connected_factors(std::size_t max_order, bool require_loop) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for_each_graph_class(n, true, require_loop, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace detail

// Compares classify(G, H) against the brute-force oracle on G x H for every
// connected G with at most max_g vertices and every connected H with at most
// max_h vertices and at least one loop. Pairs are evaluated on `jobs`
// threads; results are merged in (G, H) enumeration order, so the report is
// independent of the thread count.
inline EnumerationReport verify_theorem(std::size_t max_g, std::size_t max_h, std::size_t jobs = 1) {
  if (max_g == 0 || max_h == 0 || max_g > kMaxVerifyOrder || max_h > kMaxVerifyOrder)
    throw Error("verify needs 1 <= max_g, max_h <= " + std::to_string(kMaxVerifyOrder));
  const auto start = std::chrono::steady_clock::now();

  const auto gs = detail::connected_factors(max_g, false);
  const auto hs = detail::connected_factors(max_h, true);
  const std::size_t total = gs.size() * hs.size();
  std::vector<detail::PairOutcome> outcomes(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
      outcomes[i] = detail::evaluate_pair(gs[i / hs.size()], hs[i % hs.size()]);
  };
  jobs = std::max<std::size_t>(1, jobs);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  EnumerationReport report;
  report.max_g = max_g;
  report.max_h = max_h;
  report.pairs_checked = total;
  for (std::size_t i = 0; i < total; ++i) {
    const auto& g = gs[i / hs.size()];
    const auto& h = hs[i % hs.size()];
    auto& o = outcomes[i];
    if (!o.violation.empty())
      report.invariant_violations.push_back(to_text(g) + "x\n" + to_text(h) + o.violation);
    if (!o.predicted.in_scope()) {
      ++report.out_of_scope_count;
      report.out_of_scope.push_back({g, h, o.predicted, o.oracle});
      continue;
    }
    ++report.in_scope_count;
    if (o.oracle.is_median()) ++report.median_in_scope;
    if (o.predicted.predicts_median() != o.oracle.is_median())
      report.discrepancies.push_back({g, h, o.predicted, o.oracle});
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline nlohmann::json record_json(const PairRecord& r) {
  return {{"g", graph_json(r.g)},
          {"h", graph_json(r.h)},
          {"classifier", r.predicted.to_string()},
          {"oracle", describe(r.oracle)}};
}

// Plain `key value` summary lines, then one JSON object per line inside
// `begin <section>` / `end <section>` markers. Only the runtime line varies
// between runs.
inline void write_report(std::ostream& out, const EnumerationReport& r) {
  out << "max_g " << r.max_g << '\n'
      << "max_h " << r.max_h << '\n'
      << "pairs_checked " << r.pairs_checked << '\n'
      << "in_scope " << r.in_scope_count << '\n'
      << "out_of_scope " << r.out_of_scope_count << '\n'
      << "median_in_scope " << r.median_in_scope << '\n'
      << "discrepancies " << r.discrepancies.size() << '\n'
      << "invariant_violations " << r.invariant_violations.size() << '\n'
      << "runtime_seconds " << r.runtime_seconds << '\n'
      << "status " << (r.confirmed() ? "CONFIRMED" : "REFUTED") << '\n';
  out << "begin discrepancies\n";
  for (const auto& d : r.discrepancies) out << record_json(d).dump() << '\n';
  out << "end discrepancies\n";
  out << "begin invariant_violations\n";
  for (const auto& v : r.invariant_violations) out << nlohmann::json(v).dump() << '\n';
  out << "end invariant_violations\n";
  out << "begin out_of_scope\n";
  for (const auto& o : r.out_of_scope) out << record_json(o).dump() << '\n';
  out << "end out_of_scope\n";
}

}  // namespace medianprod
