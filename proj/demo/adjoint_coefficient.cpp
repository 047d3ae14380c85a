// Coefficient (1, 0) of the adjoint heat map applied to Delta, k = 8, nu = 2,
// for growing lattice cutoffs.

#include <iomanip>
#include <iostream>

#include "hjf/hjf.hpp"

int main() {
    using namespace hjf;
    AdjointQuery q;
    q.f = delta(7000);
    std::cout << std::setprecision(12);
    for (double lambda_max : {100.0, 400.0, 1600.0, 6400.0}) {
        q.lambda_max = lambda_max;
        const auto r = adjoint_coefficient(q);
        std::cout << "Lambda " << std::setw(6) << lambda_max << "  points " << std::setw(6) << r.lattice_points
                  << "  value " << r.value.real() << "  tail <= " << r.tail_bound << "\n";
    }
}
