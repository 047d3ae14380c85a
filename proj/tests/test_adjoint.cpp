#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hjf/hjf.hpp"

using namespace hjf;

namespace {

AdjointQuery query(double lambda_max, int f_terms = 1000) {
    AdjointQuery q;
    q.f = delta(f_terms);
    q.lambda_max = lambda_max;
    return q;
}

} // namespace

TEST(Adjoint, NormConstant) {
    const long double pi = std::numbers::pi_v<long double>;
    EXPECT_NEAR(poincare_norm_constant(8, 1, 1, {0, 0}) / (120 / std::pow(4 * pi, 5)), 1.0L, 1e-15L);
    EXPECT_NEAR(poincare_norm_constant(8, 1, 2, {0, 0}) / (poincare_norm_constant(8, 1, 1, {0, 0}) / 32), 1.0L,
                1e-15L);
    EXPECT_THROW(poincare_norm_constant(8, 1, 1, {2, 0}), std::invalid_argument);
    EXPECT_THROW(poincare_norm_constant(4, 1, 1, {0, 0}), std::invalid_argument);
}

TEST(Adjoint, Prefactor) {
    const auto r = adjoint_coefficient(query(100));
    const long double pi = std::numbers::pi_v<long double>;
    EXPECT_NEAR(r.prefactor / (1.5L * std::pow(4 * pi, 3)), 1.0L, 1e-15L);
}

TEST(Adjoint, ZeroCuspFormGivesZero) {
    AdjointQuery q = query(100);
    q.f = QSeries<Rational>(12, 1000);
    const auto r = adjoint_coefficient(q);
    EXPECT_EQ(r.value.real(), 0);
    EXPECT_EQ(r.tail_bound, 0);
}

TEST(Adjoint, SelfConvergenceWithinTailBound) {
    const auto a = adjoint_coefficient(query(100));
    const auto b = adjoint_coefficient(query(400));
    EXPECT_EQ(a.lattice_points, 317);
    EXPECT_LT(std::fabs(a.value.real() - b.value.real()), a.tail_bound);
    EXPECT_LT(b.tail_bound, a.tail_bound);
    EXPECT_GT(a.value.real(), 0);
    // frozen from the Lambda = 6400 run, tail bound 43.6
    EXPECT_LT(std::fabs(b.value.real() - 72705239.396L), b.tail_bound);
}

TEST(Adjoint, PathsAreReportedNotForced) {
    const auto r = adjoint_coefficient(query(100));
    EXPECT_GT(r.assembled, 0);
    EXPECT_NEAR(static_cast<double>(r.path_ratio), static_cast<double>(r.assembled / r.value.real()), 1e-12);
    EXPECT_EQ(r.paths_agree, std::fabs(r.path_ratio - 1) < 1e-8L);
}

TEST(Adjoint, InvarianceSuite) {
    const Report r = adjoint_invariance_suite(query(400));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks.size(), 7u);
    AdjointQuery q = query(400);
    q.rho = {1, 1};
    const Report shifted = adjoint_invariance_suite(q);
    for (const auto& c : shifted.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.witness;
}

TEST(Adjoint, Preconditions) {
    EXPECT_THROW(adjoint_coefficient(query(100, 50)), InsufficientCuspFormTruncation);
    try {
        adjoint_coefficient(query(100, 50));
    } catch (const InsufficientCuspFormTruncation& e) {
        EXPECT_GT(e.required(), 50);
    }
    AdjointQuery q = query(100);
    q.k = 6;
    EXPECT_THROW(adjoint_coefficient(q), std::invalid_argument);
    q = query(100);
    q.nu = 0;
    EXPECT_THROW(adjoint_coefficient(q), std::invalid_argument);
    q = query(100);
    q.rho = {2, 0};
    EXPECT_THROW(adjoint_coefficient(q), std::invalid_argument);
    q = query(100);
    q.f = eisenstein(12, 1000);
    EXPECT_THROW(adjoint_coefficient(q), std::invalid_argument);
}

TEST(Adjoint, CompensatedSummation) {
    CompensatedSum<double> s;
    s.add(1e16);
    for (int i = 0; i < 1000; ++i) s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), 1000.0);
    EXPECT_NEAR(to_float<long double>(Rational(1, 3)), 1.0L / 3, 1e-18L);
}
