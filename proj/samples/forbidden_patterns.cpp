// Runs the brute-force oracle on P_3 x H for each forbidden loop placement
// and prints the classifier's reason next to the oracle's witness.

#include <iostream>

#include "medianprod/medianprod.hpp"

int main() {
  using namespace medianprod;
  const auto p3 = make_pattern(PatternKind::Path, 3);
  for (const char* name : {"H1", "H2", "H3", "Hp:4", "Hp:5", "D:3", "D:4", "E:3", "T:2"}) {
    auto h = make_pattern(parse_pattern(name));
    auto product = direct_product(p3, h);
    std::cout << "P:3 x " << name << '\n'
              << "  classify: " << classify(p3, h).to_string() << '\n'
              << "  oracle:   " << describe(median_check(product.graph), pair_names(product.map)) << '\n';
  }
}
