#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hjf/hjf.hpp"
#include "oracles.hpp"

using namespace hjf;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

HermitianJacobiForm one_term(int n, LatticePoint rho) {
    HermitianJacobiForm f(8, 1, 2, false);
    f.set(n, rho, gr(1));
    return f;
}

QSeries<Rational> real_part(const QSeries<GaussianRational>& f) { return split_parts(f).first; }

} // namespace

TEST(Moments, OneTermMaps) {
    const auto s = diagonal_moments(one_term(1, {0, 0}), 2);
    EXPECT_EQ(s.at(0, 1), gr(1));
    EXPECT_EQ(s.at(1, 1), gr(0));
    const auto t = diagonal_moments(one_term(1, {2, 0}), 2);
    EXPECT_EQ(t.at(1, 1), gr(1));
    EXPECT_EQ(diagonal_moments(fixtures::h44(), 0).at(0, 0), gr(4));
}

TEST(Moments, MatchSparseOracle) {
    for (const auto& [name, phi] : fixtures::all_forms()) {
        if (phi.index() > 3) continue;
        const auto sp = oracle::to_sparse(phi);
        const auto s = diagonal_moments(phi, 3);
        for (int j = 0; j <= 3; ++j)
            for (int n = 0; n <= std::min(phi.n_max(), 6); ++n)
                EXPECT_EQ(s.at(j, n).re, oracle::moment(sp, j, n)) << name << " j=" << j << " n=" << n;
    }
}

TEST(HeatImages, SmallCases) {
    const auto a1 = dnu_closed(one_term(1, {0, 0}), 1);
    EXPECT_EQ(a1.series[1], Rational(4));
    EXPECT_EQ(a1.normalization, "(-4*pi^2)^1");
    EXPECT_EQ(dnu_closed(one_term(1, {0, 0}), 0).normalization, "");
    const auto& h = fixtures::h44();
    const auto s = diagonal_moments(h, 1);
    const auto d1 = dnu_closed(s, 1);
    for (int n = 0; n <= h.n_max(); ++n)
        EXPECT_EQ(GaussianRational(d1.series[n]), gr(4 * n) * s.at(0, n) - gr(32) * s.at(1, n));
    EXPECT_EQ(dnu_chain(one_term(1, {0, 0}), 2).series, dnu_closed(one_term(1, {0, 0}), 2).series);
}

TEST(HeatImages, ModularityOfHmapImages) {
    const auto& h = fixtures::h44();
    EXPECT_EQ(dnu_closed(h, 0).series, Rational(4) * eisenstein(8, 12));
    EXPECT_TRUE(dnu_closed(h, 1).series.is_zero());
    EXPECT_TRUE(dnu_closed(h, 3).series.is_zero());
    EXPECT_EQ(dnu_closed(h, 2).series, Rational(13440) * delta(12).with_weight(12));
    for (int nu = 0; nu <= 4; ++nu) {
        const auto img = dnu_closed(h, nu);
        EXPECT_EQ(img.series.weight(), 8 + 2 * nu);
        EXPECT_TRUE(certify_membership(img.series, 8 + 2 * nu, nu > 0).certified) << nu;
    }
}

TEST(HeatImages, ClosedEqualsChain) {
    for (const auto& [name, phi] : fixtures::all_forms()) {
        if (phi.weight() > 20) continue;
        const auto s = diagonal_moments(phi, 4);
        for (int nu = 0; nu <= 4; ++nu) EXPECT_EQ(dnu_closed(s, nu).series, dnu_chain(s, nu).series) << name << nu;
    }
}

TEST(HeatImages, CongruenceVanishing) {
    const auto& h = fixtures::h46();
    EXPECT_EQ(h.weight(), 10);
    for (int nu = 0; nu <= 3; ++nu) {
        const auto img = dnu_closed(h, nu);
        EXPECT_TRUE(img.congruence_zero);
        EXPECT_TRUE(img.series.is_zero());
    }
    const auto s = diagonal_moments(fixtures::d17(), 4);
    for (int j = 0; j <= 4; ++j)
        for (int n = 0; n <= s.n_max; ++n) EXPECT_TRUE(s.at(j, n).is_zero());
}

TEST(Inversion, RoundTrip) {
    for (const auto& [name, phi] : fixtures::all_forms()) {
        if (phi.weight() > 20) continue;
        const auto s = diagonal_moments(phi, 4);
        std::vector<QSeries<Rational>> xi;
        for (int nu = 0; nu <= 4; ++nu) {
            xi.push_back(dnu_closed(s, nu).series);
            const auto back = invert_chain(xi, phi.weight(), phi.index(), nu);
            for (int n = 0; n <= s.n_max; ++n) EXPECT_EQ(GaussianRational(back[n]), s.at(nu, n)) << name << nu;
        }
    }
    EXPECT_THROW(invert_chain({QSeries<Rational>(8, 3)}, 8, 1, 2), std::invalid_argument);
}

TEST(Hecke, CommutationWithVl) {
    for (int l : {1, 2, 3}) {
        const Report r = commutation_check(fixtures::h44(), l, 3);
        EXPECT_TRUE(r.passed()) << l;
        EXPECT_EQ(r.checks.size(), 4u);
    }
    EXPECT_TRUE(commutation_check(fixtures::h66(), 2, 3).passed());
    EXPECT_THROW(commutation_check(fixtures::h44().truncated(1), 2, 1), InsufficientTruncation);
}

TEST(OffDiagonal, WeightSeventeenWitness) {
    const auto& f = fixtures::d17();
    EXPECT_TRUE(dnu_offdiagonal(f, 0, 1, Side::upper).series.is_zero());
    const auto img = dnu_offdiagonal(f, 1, 1, Side::upper);
    EXPECT_FALSE(img.series.is_zero());
    EXPECT_FALSE(img.congruence_zero);
    EXPECT_EQ(img.normalization, "(2*pi*i)^1*(-4*pi^2)^1/1!");
    const auto [re, im] = split_parts(img.series);
    EXPECT_TRUE(im.is_zero() || re.is_zero());
    EXPECT_TRUE(certify_membership(re.is_zero() ? im : re, 20, true).certified);
    const auto t = off_diagonal_moments(f, 2, 1, Side::upper);
    bool nonzero = false;
    for (int j = 0; j <= 2; ++j)
        for (int n = 0; n <= t.n_max; ++n) nonzero = nonzero || !t.at(j, n).is_zero();
    EXPECT_TRUE(nonzero);
    EXPECT_THROW(off_diagonal_moments(f, 1, 0, Side::upper), std::invalid_argument);
}

TEST(OffDiagonal, ShiftFourImagesAreCuspForms) {
    for (int nu = 0; nu <= 2; ++nu) {
        const auto img = dnu_offdiagonal(fixtures::h44(), nu, 4, Side::upper);
        EXPECT_FALSE(img.congruence_zero);
        EXPECT_TRUE(certify_membership(real_part(img.series), 12 + 2 * nu, true).certified) << nu;
    }
    EXPECT_TRUE(dnu_offdiagonal(fixtures::h44(), 1, 1, Side::upper).congruence_zero);
    EXPECT_TRUE(dnu_offdiagonal(fixtures::h44(), 1, 1, Side::upper).series.is_zero());
}

TEST(Embedding, RangeAndVacuity) {
    EXPECT_EQ(embedding_range(8, 1), 352);
    EXPECT_EQ(embedding_map(fixtures::h44(), 2).size(), 3u);
    const auto out = injectivity_surrogate(fixtures::h44());
    EXPECT_TRUE(out.vacuous);
    EXPECT_TRUE(out.passed);
    EXPECT_EQ(embedding_map(HermitianJacobiForm(8, 1, 3), 0)[0].series, QSeries<Rational>(8, 3));
}

TEST(MixedDerivative, SmallOrders) {
    const GaussianRational a(Rational(2), Rational(1)), b(Rational(-1, 3)), c(Rational(0), Rational(5, 2));
    EXPECT_EQ(mixed_derivative_identity(a, b, c, 0), gr(1));
    EXPECT_EQ(mixed_derivative_identity(a, b, c, 1), a * b + c);
    const auto ab = a * b;
    EXPECT_EQ(mixed_derivative_identity(a, b, c, 2), ab * ab + gr(4) * ab * c + gr(2) * c * c);
    EXPECT_THROW(mixed_derivative_identity(a, b, c, -1), std::invalid_argument);
}

TEST(MixedDerivative, RandomAgainstSeriesOracle) {
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
    auto draw = [&] { return GaussianRational(ratio(num(gen), den(gen)), ratio(num(gen), den(gen))); };
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = draw(), b = draw(), c = draw();
        for (int alpha = 0; alpha <= 5; ++alpha)
            EXPECT_EQ(mixed_derivative_identity(a, b, c, alpha), oracle::mixed_derivative(a, b, c, alpha));
    }
}
