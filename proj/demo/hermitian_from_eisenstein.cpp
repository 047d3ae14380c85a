// Builds H(E_{4,1}, E_{4,1}), checks its invariants and prints a few coefficients.

#include <iostream>

#include "hjf/hjf.hpp"

int main() {
    using namespace hjf;
    const auto e41 = jacobi_eisenstein(4, 6);
    const auto h = hmap(e41, e41);
    std::cout << "weight " << h.weight() << ", index " << h.index() << ", n <= " << h.n_max() << "\n";
    for (const auto& c : validate(h).checks) std::cout << "  " << c.name << ": " << (c.passed ? "ok" : c.witness) << "\n";
    for (LatticePoint rho : {LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{1, 1}, LatticePoint{2, 0}})
        std::cout << "c(1, " << rho << ") = " << h.coeff(1, rho) << "\n";
    std::cout << "Spezialschar: " << (is_spezialschar(h).value ? "yes" : "no") << "\n";
    std::cout << to_document(h.truncated(1)).dump(2) << "\n";
}
