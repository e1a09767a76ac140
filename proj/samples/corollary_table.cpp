// Prints edge and square counts of P_k x E_l next to the closed forms
// (2l-1)(k-1) and (k-2)(l-1), with the square-count and brute-force verdicts.

#include <iomanip>
#include <iostream>

#include "medianprod/medianprod.hpp"

int main() {
  using namespace medianprod;
  std::cout << " k  l   n   m  (2l-1)(k-1)  squares  (k-2)(l-1)  grid-test  brute\n";
  for (std::size_t k = 3; k <= 8; ++k)
    for (std::size_t l = 2; l <= 6; ++l) {
      auto grid = unfold(k, l);
      const auto& g = grid.product.graph;
      std::cout << std::setw(2) << k << std::setw(3) << l << std::setw(4) << g.order() << std::setw(4)
                << g.size() << std::setw(13) << (2 * l - 1) * (k - 1) << std::setw(9) << count_squares(g)
                << std::setw(12) << (k - 2) * (l - 1) << std::setw(11)
                << (ks_median_test(g, grid.embedding) ? "median" : "no") << std::setw(7)
                << (is_median_graph(g) ? "median" : "no") << '\n';
    }
}
