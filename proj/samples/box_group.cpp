// Walks the cyclic group Box(P) of a volume-7 tetrahedron and prints each
// point's degree next to the degree of its inverse.

#include <iostream>

#include "ehrhart/ehrhart.hpp"

int main() {
  using namespace ehrhart;
  const Simplex s({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 3, 7}});
  const BoxGroup g = enumerate_box(s);
  std::cout << "volume " << s.volume() << ", delta " << g.degree_counts() << "\n";
  const BoxPoint& gen = g.points()[1];
  BoxPoint cur = gen;
  for (std::size_t k = 1; k < g.size(); ++k) {
    std::cout << k << "*g: (";
    for (std::size_t i = 0; i < cur.numerators.size(); ++i) std::cout << (i ? " " : "") << cur.coeff_string(i);
    std::cout << ")  deg " << cur.degree << "  deg(-) " << g.inverse(cur).degree << "\n";
    cur = g.add(cur, gen);
  }
}
