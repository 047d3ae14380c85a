// Heat images D_0..D_4 of H(E_{4,1}, E_{4,1}) and their coordinates in M_{8+2nu}.

#include <iostream>

#include "hjf/hjf.hpp"

int main() {
    using namespace hjf;
    const auto e41 = jacobi_eisenstein(4, 8);
    const auto h = hmap(e41, e41);
    const auto s = diagonal_moments(h, 4);
    for (int nu = 0; nu <= 4; ++nu) {
        const auto img = dnu_closed(s, nu);
        const auto cert = certify_membership(img.series, 8 + 2 * nu, nu > 0);
        std::cout << "nu = " << nu << " [" << (img.normalization.empty() ? "1" : img.normalization) << "]:";
        for (int n = 0; n <= 4; ++n) std::cout << " " << img.series[n];
        std::cout << "  coordinates:";
        for (const auto& x : cert.coordinates) std::cout << " " << x;
        std::cout << (cert.certified ? "" : "  NOT CERTIFIED") << "\n";
    }
}
