#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/bernoulli.hpp"
#include "hjf/errors.hpp"
#include "hjf/number_theory.hpp"
#include "hjf/qseries.hpp"

namespace hjf {

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even k >= 4.
inline QSeries<Rational> eisenstein(int k, int n_max) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein: k must be even and >= 4");
    QSeries<Rational> e(k, n_max);
    const Rational factor = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
    e[0] = 1;
    for (int n = 1; n <= n_max; ++n) e[n] = factor * Rational(sigma(n, static_cast<unsigned long>(k - 1)));
    return e;
}

/// Delta = q prod (1 - q^n)^24, computed as q (eta^3)^8 with Jacobi's
/// eta^3 = sum (-1)^j (2j+1) q^{j(j+1)/2}.
inline QSeries<Rational> delta(int n_max) {
    if (n_max < 0) throw std::invalid_argument("delta: n_max must be >= 0");
    const int len = n_max;  // coefficients of (eta^3)^8 needed up to q^{n_max-1}
    std::vector<std::pair<int, long>> eta3;
    for (long j = 0;; ++j) {
        const long e = j * (j + 1) / 2;
        if (e >= len) break;
        eta3.emplace_back(static_cast<int>(e), (j % 2 == 0 ? 1 : -1) * (2 * j + 1));
    }
    std::vector<Integer> acc(static_cast<std::size_t>(std::max(len, 1)), Integer(0));
    if (len > 0) acc[0] = 1;
    for (int rep = 0; rep < 8 && len > 0; ++rep) {
        std::vector<Integer> next(acc.size(), Integer(0));
        for (int i = 0; i < len; ++i) {
            if (sgn(acc[static_cast<std::size_t>(i)]) == 0) continue;
            for (auto [e, c] : eta3) {
                if (i + e >= len) break;
                next[static_cast<std::size_t>(i + e)] += acc[static_cast<std::size_t>(i)] * c;
            }
        }
        acc.swap(next);
    }
    QSeries<Rational> d(12, n_max);
    for (int n = 1; n <= n_max; ++n) d[n] = Rational(acc[static_cast<std::size_t>(n - 1)]);
    return d;
}

/// dim M_k for SL(2, Z).
inline int mk_dimension(int k) {
    if (k < 0 || k % 2 != 0 || k == 2) return 0;
    return k / 12 + (k % 12 == 2 ? 0 : 1);
}

struct BasisForm {
    QSeries<Rational> series;
    bool cusp = false;
};

/// Echelon basis of M_k: element j is Delta^j times E4^a E6^b of weight
/// k - 12j, so it starts at q^j with leading coefficient 1. Elements with
/// j >= 1 span S_k. Empty for odd k and k = 2.
inline std::vector<BasisForm> mk_basis(int k, int n_max) {
    std::vector<BasisForm> basis;
    const int dim = mk_dimension(k);
    if (dim == 0) return basis;
    const QSeries<Rational> e4 = eisenstein(4, n_max);
    const QSeries<Rational> e6 = eisenstein(6, n_max);
    const QSeries<Rational> d = delta(n_max);
    QSeries<Rational> one(0, n_max);
    one[0] = 1;
    for (int j = 0; j < dim; ++j) {
        int w = k - 12 * j;
        QSeries<Rational> f = one;
        if (w % 4 == 2) {
            f = f * e6;
            w -= 6;
        }
        for (; w > 0; w -= 4) f = f * e4;
        for (int t = 0; t < j; ++t) f = f * d;
        basis.push_back({f.with_weight(k), j > 0});
    }
    return basis;
}

struct MembershipCertificate {
    bool certified = false;
    std::vector<Rational> coordinates;  ///< w.r.t. mk_basis(k), when certified
    std::optional<int> failing_index;   ///< first q-power where the residual is nonzero
    std::string reason;
};

/// Exact coordinates of g in mk_basis(k), verified on every stored
/// coefficient. Requires n_max >= floor(k/12) + 1 (valence bound).
inline MembershipCertificate certify_membership(const QSeries<Rational>& g, int k, bool cusp_only) {
    const int needed = (k > 0 ? k / 12 : 0) + 1;
    if (g.n_max() < needed) {
        std::ostringstream os;
        os << "certify_membership: weight " << k << " needs n_max >= " << needed << ", have " << g.n_max();
        throw InsufficientTruncation(os.str());
    }
    MembershipCertificate cert;
    const auto basis = mk_basis(k, g.n_max());
    QSeries<Rational> residual = g.with_weight(std::max(k, 0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const int jj = static_cast<int>(j);
        Rational x = residual[jj];
        if (!is_zero(x)) residual = residual - x * basis[j].series;
        cert.coordinates.push_back(x);
    }
    for (int n = 0; n <= residual.n_max(); ++n) {
        if (!is_zero(residual[n])) {
            cert.failing_index = n;
            std::ostringstream os;
            os << "residual coefficient at q^" << n << " is " << residual[n] << " (dim M_" << k << " = "
               << basis.size() << ")";
            cert.reason = os.str();
            return cert;
        }
    }
    if (cusp_only && !basis.empty() && !basis[0].cusp && !is_zero(cert.coordinates[0])) {
        cert.failing_index = 0;
        cert.reason = "constant term is nonzero, not a cusp form";
        return cert;
    }
    cert.certified = true;
    return cert;
}

/// T_l on weight k: a'(n) = sum_{a | gcd(n, l)} a^{k-1} a(nl/a^2); output
/// truncation floor(n_max / l).
template <class Coeff>
QSeries<Coeff> hecke_tl(const QSeries<Coeff>& f, int l, int k) {
    if (l <= 0) throw std::invalid_argument("hecke_tl: l must be positive");
    const int n_out = f.n_max() / l;
    QSeries<Coeff> out(f.weight(), n_out);
    for (int n = 0; n <= n_out; ++n) {
        const std::int64_t g = gcd64(n, l);
        for (std::int64_t a : divisors(g)) {
            const auto idx = static_cast<int>(static_cast<std::int64_t>(n) * l / (a * a));
            const Rational scale(pow_int(Integer(static_cast<long>(a)), static_cast<unsigned long>(k - 1)));
            out[n] += Coeff(f[idx] * scale);
        }
    }
    return out;
}

/// Petersson pairing (f, P_n^k) = a(n, f) Gamma(k-1) / (4 pi n)^{k-1}.
inline double poincare_pairing_constant(int k, std::int64_t n, const Rational& a_n) {
    if (k <= 2) throw std::invalid_argument("poincare_pairing_constant: k must be > 2");
    if (n < 1) throw std::invalid_argument("poincare_pairing_constant: n must be >= 1");
    const double log_value = std::lgamma(static_cast<double>(k - 1)) -
                             static_cast<double>(k - 1) * std::log(4.0 * std::numbers::pi * static_cast<double>(n));
    return a_n.get_d() * std::exp(log_value);
}

} // namespace hjf
