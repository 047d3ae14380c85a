#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hjf/hjf.hpp"

using namespace hjf;

namespace {

// Coefficients by discriminant 4n - r^2, index 1.
const std::map<std::int64_t, long> e41_table = {{0, 1}, {3, 56}, {4, 126}, {7, 576}, {8, 756}, {11, 1512}, {12, 2072}};
const std::map<std::int64_t, long> e61_table = {{0, 1}, {3, -88}, {4, -330}, {7, -4224}, {8, -7524}, {11, -30600}, {12, -46552}};

void expect_table(const ClassicalJacobiForm& phi, const std::map<std::int64_t, long>& table) {
    phi.for_each([&](int n, std::int64_t r, const Rational& c) {
        const std::int64_t d = 4LL * n - r * r;
        auto it = table.find(d);
        if (it != table.end()) {
            EXPECT_EQ(c, Rational(it->second)) << "n=" << n << " r=" << r;
        }
    });
}

} // namespace

TEST(JacobiEisenstein, KnownCoefficients) {
    expect_table(fixtures::e41(), e41_table);
    expect_table(fixtures::e61(), e61_table);
    EXPECT_EQ(fixtures::e41().coeff(1, 2), Rational(1));
    EXPECT_EQ(fixtures::e41().coeff(1, 3), Rational(0));
    EXPECT_THROW(jacobi_eisenstein(8, 3), std::invalid_argument);
}

TEST(JacobiEisenstein, SpecializesToEisenstein) {
    EXPECT_EQ(specialize_z0(fixtures::e41()), eisenstein(4, 12));
    EXPECT_EQ(specialize_z0(fixtures::e61()), eisenstein(6, 12));
}

TEST(JacobiEisenstein, Invariants) {
    for (const auto* phi : {&fixtures::e41(), &fixtures::e61()}) {
        const Report r = classical_invariant_check(*phi);
        EXPECT_TRUE(r.passed());
        EXPECT_NE(r.find("parity"), nullptr);
        EXPECT_NE(r.find("discriminant-class"), nullptr);
    }
}

TEST(Classical, CorruptionIsDetected) {
    ClassicalJacobiForm phi = fixtures::e41().truncated(4);
    phi.set(2, 1, Rational(577));
    const Report r = classical_invariant_check(phi);
    EXPECT_FALSE(r.passed());
    EXPECT_THROW(phi.set(1, 3, Rational(1)), std::out_of_range);
}

TEST(Classical, ProductsAndLifts) {
    const auto p = jacobi_product(fixtures::e41().truncated(6), fixtures::e61().truncated(6));
    EXPECT_EQ(p.weight(), 10);
    EXPECT_EQ(p.index(), 2);
    EXPECT_TRUE(classical_invariant_check(p).passed());
    EXPECT_EQ(specialize_z0(p), eisenstein(4, 6) * eisenstein(6, 6));

    const auto lifted = scalar_lift(eisenstein(4, 6), fixtures::e41().truncated(6));
    EXPECT_EQ(lifted.weight(), 8);
    EXPECT_EQ(specialize_z0(lifted), eisenstein(4, 6) * eisenstein(4, 6));
}
