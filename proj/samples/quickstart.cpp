// Quick tour: root census over Z_n, a bivariate pair census over GF(4), and
// a resultant computed from text input.

#include <iostream>

#include "rootcensus/rootcensus.hpp"

using namespace rootcensus;

int main() {
  auto zn = zn_root_census(12, 2);
  std::cout << "Z_12 quadratics: mean " << zn.mean->str() << ", variance " << zn.variance->str() << " (theory "
            << zn.theory_var.str() << ")\n";

  auto pairs = fq_pair_census(4, 2, 2);
  std::cout << "GF(4) quadratic pairs: variance " << pairs.variance->str() << ", freq";
  for (auto f : pairs.freq) std::cout << ' ' << f;
  std::cout << '\n';

  Ring f101 = Ring::prime_field(101);
  auto a = shaped_from_mpoly(f101, parse_poly(f101, "x0^2 + x2"));
  auto b = shaped_from_mpoly(f101, parse_poly(f101, "x0^2 + x2 + x1 - 1"));
  std::cout << "res_x0 = " << format_poly(resultant_poly(f101, a, b)) << "  (variables renumbered from x1)\n";
}
