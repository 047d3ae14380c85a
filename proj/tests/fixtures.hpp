#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hjf/hjf.hpp"

namespace fixtures {

using hjf::HermitianJacobiForm;

inline const hjf::ClassicalJacobiForm& e41() {
    static const auto f = hjf::jacobi_eisenstein(4, 12);
    return f;
}

inline const hjf::ClassicalJacobiForm& e61() {
    static const auto f = hjf::jacobi_eisenstein(6, 12);
    return f;
}

/// H(E_{4,1}, E_{4,1}) to n = 12, weight 8, index 1.
inline const HermitianJacobiForm& h44() {
    static const auto f = hjf::hmap(e41(), e41());
    return f;
}

/// H(E_{4,1}, E_{6,1}), weight 10.
inline const HermitianJacobiForm& h46() {
    static const auto f = hjf::hmap(e41(), e61());
    return f;
}

/// H(E_{6,1}, E_{6,1}), weight 12.
inline const HermitianJacobiForm& h66() {
    static const auto f = hjf::hmap(e61(), e61());
    return f;
}

/// Weight 17, index 3: diff_construct_1(h44, V_2 h44).
inline const HermitianJacobiForm& d17() {
    static const auto f = hjf::diff_construct_1(h44(), hjf::v_l(h44(), 2));
    return f;
}

/// Every form the suite constructs, with a label.
inline const std::vector<std::pair<std::string, HermitianJacobiForm>>& all_forms() {
    static const std::vector<std::pair<std::string, HermitianJacobiForm>> forms = [] {
        using namespace hjf;
        std::vector<std::pair<std::string, HermitianJacobiForm>> v;
        v.emplace_back("H(E4,1,E4,1)", h44());
        v.emplace_back("H(E4,1,E6,1)", h46());
        v.emplace_back("H(E6,1,E6,1)", h66());
        v.emplace_back("E4*H(E4,1,E4,1)", scalar_lift(eisenstein(4, 12), h44()));
        v.emplace_back("V_2 H(E4,1,E4,1)", v_l(h44(), 2));
        v.emplace_back("V_3 H(E4,1,E4,1)", v_l(h44(), 3));
        v.emplace_back("U_{1+i} H(E4,1,E4,1)", u_rho(h44(), {1, 1}));
        v.emplace_back("diff1 weight 17", d17());
        v.emplace_back("diff2 weight 34", diff_construct_2(h44(), v_l(h44(), 2)));
        v.emplace_back("Lambda(H(E4,1,E4,1))", unit_average(h44()));
        return v;
    }();
    return forms;
}

} // namespace fixtures
