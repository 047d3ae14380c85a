#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/errors.hpp"
#include "hjf/hermitian.hpp"
#include "hjf/modforms.hpp"
#include "hjf/qseries.hpp"
#include "hjf/report.hpp"
#include "hjf/theta.hpp"

namespace hjf {

/// S_j(n) = sum_rho N(rho/2)^j c(n, rho), stored as values[j][n].
struct DiagonalMoments {
    int weight = 0;
    int index = 1;
    int n_max = 0;
    std::vector<std::vector<GaussianRational>> values;

    int j_max() const { return static_cast<int>(values.size()) - 1; }
    const GaussianRational& at(int j, int n) const {
        return values.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(n));
    }
};

enum class Side { upper, lower };

/// T_j(n) = sum_rho N(rho/2)^j (rho/2)^d c(n, rho) on the upper side,
/// with conj(rho)/2 in place of rho/2 on the lower side.
struct OffDiagonalMoments {
    int weight = 0;
    int index = 1;
    int n_max = 0;
    int shift = 1;
    Side side = Side::upper;
    std::vector<std::vector<GaussianRational>> values;

    int j_max() const { return static_cast<int>(values.size()) - 1; }
    const GaussianRational& at(int j, int n) const {
        return values.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(n));
    }
};

namespace detail {

inline std::vector<std::vector<GaussianRational>> moments(const HermitianJacobiForm& phi, int j_max, int d, Side side) {
    if (j_max < 0) throw std::invalid_argument("moments: j_max must be >= 0");
    std::vector<std::vector<GaussianRational>> values(static_cast<std::size_t>(j_max) + 1,
                                                      std::vector<GaussianRational>(
                                                          static_cast<std::size_t>(phi.n_max()) + 1));
    const Rational half(1, 2);
    phi.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        GaussianRational v = c;
        const GaussianRational r = to_gaussian_rational(side == Side::upper ? rho : rho.conj()) * half;
        for (int t = 0; t < d; ++t) v = v * r;
        const Rational q = ratio(static_cast<long>(rho.norm()), 4);
        for (int j = 0; j <= j_max; ++j) {
            values[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] += v;
            v *= q;
        }
    });
    return values;
}

inline Rational fact(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    return Rational(factorial(static_cast<unsigned long>(n)));
}

inline QSeries<Rational> real_series(const QSeries<GaussianRational>& f, const char* what) {
    auto [re, im] = split_parts(f);
    if (!im.is_zero()) {
        for (int n = 0; n <= im.n_max(); ++n)
            if (!is_zero(im[n])) {
                std::ostringstream os;
                os << what << ": coefficient " << n << " is " << f[n] << ", not rational";
                throw InvariantViolation(os.str());
            }
    }
    return re;
}

} // namespace detail

inline DiagonalMoments diagonal_moments(const HermitianJacobiForm& phi, int j_max) {
    return {phi.weight(), phi.index(), phi.n_max(), detail::moments(phi, j_max, 0, Side::upper)};
}

inline OffDiagonalMoments off_diagonal_moments(const HermitianJacobiForm& phi, int j_max, int d, Side side) {
    if (d < 1) throw std::invalid_argument("off_diagonal_moments: shift must be >= 1");
    return {phi.weight(), phi.index(), phi.n_max(), d, side, detail::moments(phi, j_max, d, side)};
}

/// A normalized heat image: the unnormalized series is normalization * series.
struct HeatImage {
    QSeries<Rational> series;
    std::string normalization;
    bool congruence_zero = false;  ///< weight not divisible by 4: the series vanishes identically
};

struct OffDiagonalImage {
    QSeries<GaussianRational> series;
    std::string normalization;
    bool congruence_zero = false;  ///< shift not congruent to the weight mod 4
};

/// a_nu(n) = nu! sum_mu (-4)^{nu-mu} (4mn)^mu (k+2nu-mu-2)! / (mu! (k+nu-2)! ((nu-mu)!)^2) S_{nu-mu}(n).
inline HeatImage dnu_closed(const DiagonalMoments& s, int nu) {
    const int k = s.weight, m = s.index;
    if (nu < 0) throw std::invalid_argument("dnu_closed: nu must be >= 0");
    if (k + nu - 2 < 0) throw std::invalid_argument("dnu_closed: needs k + nu >= 2");
    if (s.j_max() < nu) throw std::invalid_argument("dnu_closed: moments computed to insufficient depth");
    QSeries<GaussianRational> out(k + 2 * nu, s.n_max);
    const Rational nu_fact = detail::fact(nu);
    const Rational denom_k = detail::fact(k + nu - 2);
    for (int mu = 0; mu <= nu; ++mu) {
        const Rational c = nu_fact * Rational(pow_int(Integer(-4), static_cast<unsigned long>(nu - mu))) *
                           detail::fact(k + 2 * nu - mu - 2) /
                           (detail::fact(mu) * denom_k * detail::fact(nu - mu) * detail::fact(nu - mu));
        for (int n = 0; n <= s.n_max; ++n) {
            const GaussianRational& sj = s.at(nu - mu, n);
            if (sj.is_zero()) continue;
            const Rational p(pow_int(Integer(4L * m * n), static_cast<unsigned long>(mu)));
            out[n] += sj * Rational(c * p);
        }
    }
    std::ostringstream norm;
    if (nu > 0) norm << "(-4*pi^2)^" << nu;
    return {detail::real_series(out, "dnu_closed"), norm.str(), k % 4 != 0};
}

inline HeatImage dnu_closed(const HermitianJacobiForm& phi, int nu) {
    return dnu_closed(diagonal_moments(phi, nu), nu);
}

/// nu single steps g'_j = 4mn g_j - 4(w+j)(j+1) g_{j+1} at weights
/// w = k, k+2, ..., on g_j = S_j / (j!)^2; returns level 0.
inline HeatImage dnu_chain(const DiagonalMoments& s, int nu) {
    const int k = s.weight, m = s.index;
    if (nu < 0) throw std::invalid_argument("dnu_chain: nu must be >= 0");
    if (s.j_max() < nu) throw std::invalid_argument("dnu_chain: moments computed to insufficient depth");
    QSeries<GaussianRational> out(k + 2 * nu, s.n_max);
    for (int n = 0; n <= s.n_max; ++n) {
        std::vector<GaussianRational> g;
        for (int j = 0; j <= nu; ++j) {
            const Rational f = detail::fact(j);
            g.push_back(s.at(j, n) * Rational(Rational(1) / (f * f)));
        }
        const Rational t(4L * m * n);
        for (int step = 0; step < nu; ++step) {
            const long w = k + 2L * step;
            for (std::size_t j = 0; j + 1 < g.size(); ++j)
                g[j] = g[j] * t - g[j + 1] * Rational(4 * (w + static_cast<long>(j)) * static_cast<long>(j + 1));
            g.pop_back();
        }
        out[n] = g[0];
    }
    std::ostringstream norm;
    if (nu > 0) norm << "(-4*pi^2)^" << nu;
    return {detail::real_series(out, "dnu_chain"), norm.str(), k % 4 != 0};
}

inline HeatImage dnu_chain(const HermitianJacobiForm& phi, int nu) {
    return dnu_chain(diagonal_moments(phi, nu), nu);
}

/// Closed form with k replaced by k' = k + d and S_j by T_j:
/// a(n) = nu! d! sum_mu (-4)^{nu-mu} (4mn)^mu (k'+2nu-mu-2)! / (mu! (k'+nu-2)! (nu-mu+d)! (nu-mu)!) T_{nu-mu}(n).
inline OffDiagonalImage dnu_offdiagonal(const OffDiagonalMoments& t, int nu) {
    const int d = t.shift, k = t.weight + d, m = t.index;
    if (nu < 0) throw std::invalid_argument("dnu_offdiagonal: nu must be >= 0");
    if (k + nu - 2 < 0) throw std::invalid_argument("dnu_offdiagonal: needs k + d + nu >= 2");
    if (t.j_max() < nu) throw std::invalid_argument("dnu_offdiagonal: moments computed to insufficient depth");
    QSeries<GaussianRational> out(k + 2 * nu, t.n_max);
    const Rational lead = detail::fact(nu) * detail::fact(d);
    for (int mu = 0; mu <= nu; ++mu) {
        const Rational c = lead * Rational(pow_int(Integer(-4), static_cast<unsigned long>(nu - mu))) *
                           detail::fact(k + 2 * nu - mu - 2) /
                           (detail::fact(mu) * detail::fact(k + nu - 2) * detail::fact(nu - mu + d) *
                            detail::fact(nu - mu));
        for (int n = 0; n <= t.n_max; ++n) {
            const GaussianRational& tj = t.at(nu - mu, n);
            if (tj.is_zero()) continue;
            out[n] += tj * Rational(c * Rational(pow_int(Integer(4L * m * n), static_cast<unsigned long>(mu))));
        }
    }
    std::ostringstream norm;
    norm << "(2*pi*i)^" << d;
    if (nu > 0) norm << "*(-4*pi^2)^" << nu;
    norm << "/" << d << "!";
    const bool zero = ((d - t.weight) % 4 + 4) % 4 != 0;
    return {out, norm.str(), zero};
}

inline OffDiagonalImage dnu_offdiagonal(const HermitianJacobiForm& phi, int nu, int d, Side side) {
    return dnu_offdiagonal(off_diagonal_moments(phi, nu, d, side), nu);
}

/// S_nu / (nu!)^2 = 1/(nu! 4^nu) sum_mu (-1)^{nu-mu} (4mn)^mu C(nu, mu)
///   (k+2nu-2mu-1) (k+nu-mu-2)! / (k+2nu-mu-1)! a_{nu-mu}
/// from xi[j] = dnu_closed(phi, j), j = 0..nu. Returns S_nu as a series in n.
inline QSeries<Rational> invert_chain(const std::vector<QSeries<Rational>>& xi, int k, int m, int nu) {
    if (nu < 0) throw std::invalid_argument("invert_chain: nu must be >= 0");
    if (static_cast<int>(xi.size()) != nu + 1) {
        std::ostringstream os;
        os << "invert_chain: expected " << nu + 1 << " heat images, got " << xi.size();
        throw std::invalid_argument(os.str());
    }
    if (k + nu - 2 < 0 && nu > 0) throw std::invalid_argument("invert_chain: needs k + nu >= 2");
    int n_max = xi[0].n_max();
    for (const auto& x : xi) n_max = std::min(n_max, x.n_max());
    QSeries<Rational> out(k, n_max);
    const Rational nf = detail::fact(nu);
    const Rational scale = nf * nf / (nf * Rational(pow_int(Integer(4), static_cast<unsigned long>(nu))));
    for (int mu = 0; mu <= nu; ++mu) {
        const Rational c = scale * Rational((nu - mu) % 2 == 0 ? 1 : -1) *
                           Rational(binomial(static_cast<unsigned long>(nu), static_cast<unsigned long>(mu))) *
                           Rational(k + 2 * nu - 2 * mu - 1) * detail::fact(k + nu - mu - 2) /
                           detail::fact(k + 2 * nu - mu - 1);
        const auto& a = xi[static_cast<std::size_t>(nu - mu)];
        for (int n = 0; n <= n_max; ++n) {
            if (is_zero(a[n])) continue;
            out[n] += c * Rational(pow_int(Integer(4L * m * n), static_cast<unsigned long>(mu))) * a[n];
        }
    }
    return out;
}

/// (D_0 phi, ..., D_{nu_max} phi), normalized.
inline std::vector<HeatImage> embedding_map(const HermitianJacobiForm& phi, int nu_max) {
    if (nu_max < 0) throw std::invalid_argument("embedding_map: nu_max must be >= 0");
    const DiagonalMoments s = diagonal_moments(phi, nu_max);
    std::vector<HeatImage> out;
    for (int nu = 0; nu <= nu_max; ++nu) out.push_back(dnu_closed(s, nu));
    return out;
}

/// The full embedding range R(4m kappa(k, m)).
inline std::int64_t embedding_range(int k, int m) { return big_r(m, 4LL * m * kappa(k, m)); }

/// D_nu(phi | V_l) against (D_nu phi) | T_l for nu = 0..nu_max on the
/// shared truncation floor(n_max / l).
inline Report commutation_check(const HermitianJacobiForm& phi, int l, int nu_max) {
    if (l < 1) throw std::invalid_argument("commutation_check: l must be positive");
    if (phi.n_max() < l) {
        std::ostringstream os;
        os << "commutation_check: n_max = " << phi.n_max() << " < l = " << l;
        throw InsufficientTruncation(os.str());
    }
    Report report;
    const DiagonalMoments left_moments = diagonal_moments(v_l(phi, l), nu_max);
    const DiagonalMoments right_moments = diagonal_moments(phi, nu_max);
    for (int nu = 0; nu <= nu_max; ++nu) {
        const QSeries<Rational> lhs = dnu_closed(left_moments, nu).series;
        const QSeries<Rational> rhs = hecke_tl(dnu_closed(right_moments, nu).series, l, phi.weight() + 2 * nu);
        std::ostringstream name;
        name << "l=" << l << ",nu=" << nu;
        CheckResult check{name.str(), true, ""};
        const int n = std::min(lhs.n_max(), rhs.n_max());
        for (int i = 0; i <= n; ++i)
            if (lhs[i] != rhs[i]) {
                std::ostringstream os;
                os << "q^" << i << ": D(phi|V_l) = " << lhs[i] << ", (D phi)|T_l = " << rhs[i];
                check = {name.str(), false, os.str()};
                break;
            }
        report.checks.push_back(check);
    }
    return report;
}

struct InjectivityOutcome {
    bool vacuous = true;  ///< hypothesis not met: not Spezialschar, or n_max < R
    bool passed = true;
    std::string detail;
};

/// For a Spezialschar phi with n_max >= R(4m kappa): vanishing of all D_nu phi
/// up to nu = R must force phi = 0.
inline InjectivityOutcome injectivity_surrogate(const HermitianJacobiForm& phi) {
    InjectivityOutcome out;
    const std::int64_t range = embedding_range(phi.weight(), phi.index());
    std::ostringstream os;
    if (!is_spezialschar(phi).value) {
        os << "not Spezialschar";
    } else if (phi.n_max() < range) {
        os << "n_max = " << phi.n_max() << " < R(4m kappa) = " << range;
    } else {
        out.vacuous = false;
        bool images_vanish = true;
        for (const auto& img : embedding_map(phi, static_cast<int>(range)))
            if (!img.series.is_zero()) images_vanish = false;
        out.passed = !images_vanish || phi.is_zero();
        os << (images_vanish ? "all images vanish" : "some image is nonzero");
    }
    out.detail = os.str();
    return out;
}

/// d^a/dz1^a d^a/dz2^a exp(a z1 + b z2 + c z1 z2) at z = 0, as
/// sum_h (ab)^h c^{alpha-h} C(alpha, h)^2 (alpha-h)!.
inline GaussianRational mixed_derivative_identity(const GaussianRational& a, const GaussianRational& b,
                                                  const GaussianRational& c, int alpha) {
    if (alpha < 0) throw std::invalid_argument("mixed_derivative_identity: alpha must be >= 0");
    const GaussianRational ab = a * b;
    GaussianRational sum;
    for (int h = 0; h <= alpha; ++h) {
        GaussianRational term(Rational(1));
        for (int t = 0; t < h; ++t) term = term * ab;
        for (int t = 0; t < alpha - h; ++t) term = term * c;
        const Rational bin(binomial(static_cast<unsigned long>(alpha), static_cast<unsigned long>(h)));
        sum += term * Rational(bin * bin * detail::fact(alpha - h));
    }
    return sum;
}

} // namespace hjf
