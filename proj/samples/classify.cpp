// Lists every admissible delta vector of volume 7 in dimension 5 together with
// the HNF simplex that realizes it.

#include <iostream>

#include "ehrhart/ehrhart.hpp"

int main() {
  using namespace ehrhart;
  for (const auto& entry : enumerate_admissible(7, 5)) {
    const auto& w = entry.witness;
    std::cout << entry.delta << "  " << w.case_id.to_string() << "  P_7(";
    for (std::size_t j = 0; j < w.spec.coeffs.size(); ++j) std::cout << (j ? "," : "") << w.spec.coeffs[j];
    std::cout << ")  box check: " << (witness_verified_by_box(w) ? "ok" : "FAILED") << "\n";
  }
}
