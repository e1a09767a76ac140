// medianprod: command-line front end.
//
//   medianprod product <G> <H> [--cartesian] [--dot]
//   medianprod median-check <G>
//   medianprod classify <G> <H>
//   medianprod witness <id> [--k N] [--l N]
//   medianprod unfold <k> <l> [--dot]
//   medianprod verify --max-g N --max-h N [--jobs J] [--report PATH]
//
// A graph argument is a file in the text graph format, `-` for stdin, or
// `pat:<name>` for a built-in pattern (P:k C:k S:k K23 T:n H1 H2 H3 Hp:k D:k E:k).
// Exit status: 0 ok / median, 1 negative verdict, 2 error.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "medianprod/medianprod.hpp"

namespace {

using namespace medianprod;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

Graph load_graph(const std::string& arg) {
  if (arg.rfind("pat:", 0) == 0) return make_pattern(parse_pattern(arg.substr(4)));
  if (arg == "-") return read_graph(std::cin, "<stdin>").graph;
  return read_graph_file(arg).graph;
}

int run_product(const std::string& g_arg, const std::string& h_arg, bool cartesian, bool dot) {
  auto g = load_graph(g_arg);
  auto h = load_graph(h_arg);
  auto p = cartesian ? cartesian_product(g, h) : direct_product(g, h);
  if (dot) {
    auto name = pair_names(p.map);
    write_dot(std::cout, p.graph, [&](Vertex v) { return name(v); });
  } else {
    std::cout << "# " << (cartesian ? "cartesian" : "direct") << " product, vertex (a,x) = a*"
              << h.order() << "+x\n";
    write_graph(std::cout, p.graph);
  }
  return kOk;
}

int run_median_check(const std::string& arg) {
  auto g = load_graph(arg);
  auto verdict = median_check(g);
  std::cout << describe(verdict) << '\n';
  return verdict.is_median() ? kOk : kNegative;
}

int run_classify(const std::string& g_arg, const std::string& h_arg) {
  auto verdict = classify(load_graph(g_arg), load_graph(h_arg));
  std::cout << verdict.to_string() << '\n';
  return std::holds_alternative<NonMedianReason>(verdict.prediction) ? kNegative : kOk;
}

int run_witness(const std::string& id, const WitnessOptions& opt) {
  auto bundle = make_witness(id, opt);
  std::cout << describe(bundle);
  return check_witness(bundle).empty() ? kOk : kError;
}

int run_unfold(std::size_t k, std::size_t l, bool dot) {
  auto grid = unfold(k, l);
  const auto& g = grid.product.graph;
  const auto squares = count_squares(g);
  const bool median = ks_median_test(g, grid.embedding);
  if (dot) {
    auto name = pair_names(grid.product.map);
    write_dot(std::cout, g, [&](Vertex v) { return name(v); }, &grid.embedding);
  } else {
    std::cout << "# P_" << k << " x E_" << l << ": n=" << g.order() << " m=" << g.size()
              << " squares=" << squares << " m-n+1=" << (g.size() + 1 - g.order())
              << " median=" << (median ? "yes" : "no") << '\n';
    write_graph(std::cout, g);
    write_embedding(std::cout, grid.embedding);
  }
  return median ? kOk : kNegative;
}

int run_verify(std::size_t max_g, std::size_t max_h, std::size_t jobs, const std::string& report_path) {
  auto report = verify_theorem(max_g, max_h, jobs);
  std::ostringstream full;
  write_report(full, report);
  const auto text = full.str();
  std::cout << text.substr(0, text.find("begin discrepancies"));
  for (const auto& d : report.discrepancies) std::cout << "DISCREPANCY " << record_json(d).dump() << '\n';
  for (const auto& v : report.invariant_violations) std::cout << "VIOLATION " << v << '\n';
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Error("cannot write report to '" + report_path + "'");
    out << text;
  }
  return report.confirmed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Median-graph checks for direct products of graphs with loops"};
  app.require_subcommand(1);

  std::string g_arg, h_arg;
  bool cartesian = false, dot = false;
  auto* product = app.add_subcommand("product", "Print the direct (or cartesian) product of two graphs");
  product->add_option("G", g_arg, "first factor")->required();
  product->add_option("H", h_arg, "second factor")->required();
  product->add_flag("--cartesian", cartesian, "cartesian product instead of direct");
  product->add_flag("--dot", dot, "Graphviz output");

  auto* median = app.add_subcommand("median-check", "Brute-force median test with a witness");
  median->add_option("graph", g_arg, "graph")->required();

  auto* cls = app.add_subcommand("classify", "Predict whether G x H is median");
  cls->add_option("G", g_arg, "first factor")->required();
  cls->add_option("H", h_arg, "second factor")->required();

  std::string witness_id;
  WitnessOptions wopt;
  std::size_t wk = 0, wl = 0;
  auto* witness = app.add_subcommand("witness", "Build and validate a certificate instance");
  std::string ids;
  for (auto id : kWitnessIds) ids += std::string(ids.empty() ? "" : ", ") + std::string(id);
  witness->add_option("id", witness_id, "one of: " + ids)->required();
  auto* wk_opt = witness->add_option("--k", wk, "size parameter k");
  auto* wl_opt = witness->add_option("--l", wl, "size parameter l");

  std::size_t uk = 0, ul = 0;
  auto* unfold_cmd = app.add_subcommand("unfold", "Lay P_k x E_l out as a grid graph");
  unfold_cmd->add_option("k", uk, "path length, >= 3")->required();
  unfold_cmd->add_option("l", ul, "end-loop path length, >= 2")->required();
  unfold_cmd->add_flag("--dot", dot, "Graphviz output with pinned positions");

  std::size_t max_g = 0, max_h = 0, jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Check the classification on all small factor pairs");
  verify->add_option("--max-g", max_g, "largest G order")->required();
  verify->add_option("--max-h", max_h, "largest H order")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--report", report_path, "write the full report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*product) return run_product(g_arg, h_arg, cartesian, dot);
    if (*median) return run_median_check(g_arg);
    if (*cls) return run_classify(g_arg, h_arg);
    if (*witness) {
      if (wk_opt->count() > 0) wopt.k = wk;
      if (wl_opt->count() > 0) wopt.l = wl;
      return run_witness(witness_id, wopt);
    }
    if (*unfold_cmd) return run_unfold(uk, ul, dot);
    if (*verify) return run_verify(max_g, max_h, jobs, report_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
