#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/number_theory.hpp"

namespace hjf {

namespace detail {

struct BernoulliTable {
    std::shared_mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

} // namespace detail

/// B_n with B_1 = -1/2, from sum_{j<=n} C(n+1, j) B_j = 0. Memoised.
inline Rational bernoulli(unsigned n) {
    auto& t = detail::bernoulli_table();
    {
        std::shared_lock lock(t.mutex);
        if (n < t.values.size()) return t.values[n];
    }
    std::unique_lock lock(t.mutex);
    while (t.values.size() <= n) {
        const unsigned m = static_cast<unsigned>(t.values.size());
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * t.values[j];
        t.values.push_back(Rational(-s / Rational(m + 1)));
    }
    return t.values[n];
}

/// B_n(x) = sum_j C(n, j) B_j x^{n-j}.
inline Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    Rational s = 0;
    Rational xp = 1;  // x^{n-j}, built from j = n downwards
    for (unsigned j = n + 1; j-- > 0;) {
        s += Rational(binomial(n, j)) * bernoulli(j) * xp;
        xp *= x;
    }
    return s;
}

/// B_{n, chi_D} for the Kronecker character of discriminant D (D = 1 gives
/// the trivial character, with B_{1,1} = +1/2).
inline Rational generalized_bernoulli(unsigned n, std::int64_t disc) {
    const std::int64_t f = disc < 0 ? -disc : disc;
    Rational s = 0;
    for (std::int64_t a = 1; a <= f; ++a) {
        int chi = kronecker(disc, a);
        if (chi == 0) continue;
        Rational term = bernoulli_polynomial(n, ratio(static_cast<long>(a), static_cast<long>(f)));
        if (chi > 0) s += term;
        else s -= term;
    }
    return s * Rational(pow_int(Integer(static_cast<long>(f)), n - 1));
}

/// zeta(1 - n) for n >= 1.
inline Rational zeta_at_one_minus(unsigned n) {
    if (n == 1) return Rational(-1, 2);
    return Rational(-bernoulli(n) / Rational(n));
}

namespace detail {

struct CohenTable {
    std::shared_mutex mutex;
    std::map<std::pair<long, std::int64_t>, Rational> values;
};

inline CohenTable& cohen_table() {
    static CohenTable table;
    return table;
}

inline Rational cohen_h_uncached(long r, std::int64_t n) {
    if (n == 0) return zeta_at_one_minus(static_cast<unsigned>(2 * r));
    const std::int64_t disc = (r % 2 == 0) ? n : -n;
    const std::int64_t c = mod_floor(disc, 4);
    if (c == 2 || c == 3) return Rational(0);
    auto [d, f] = fundamental_decomposition(disc);
    // L(1 - r, chi_D) = -B_{r,chi_D} / r
    Rational l_value = -generalized_bernoulli(static_cast<unsigned>(r), d) / Rational(r);
    Integer s = 0;
    for (std::int64_t e : divisors(f)) {
        int mu = mobius(e);
        if (mu == 0) continue;
        int chi = kronecker(d, e);
        if (chi == 0) continue;
        s += mu * chi * pow_int(Integer(static_cast<long>(e)), static_cast<unsigned long>(r - 1)) *
             sigma(f / e, static_cast<unsigned long>(2 * r - 1));
    }
    return Rational(l_value * Rational(s));
}

} // namespace detail

/// Cohen's H(r, N): zeta(1 - 2r) for N = 0, zero unless (-1)^r N is 0 or 1
/// mod 4, otherwise L(1-r, chi_D) sum_{d|f} mu(d) chi_D(d) d^{r-1} sigma_{2r-1}(f/d)
/// where (-1)^r N = D f^2 with D fundamental. Memoised, thread-safe.
inline Rational cohen_h(long r, std::int64_t n) {
    if (r < 1) throw std::invalid_argument("cohen_h: r must be >= 1");
    if (n < 0) throw std::invalid_argument("cohen_h: N must be >= 0");
    auto& t = detail::cohen_table();
    const auto key = std::make_pair(r, n);
    {
        std::shared_lock lock(t.mutex);
        auto it = t.values.find(key);
        if (it != t.values.end()) return it->second;
    }
    Rational v = detail::cohen_h_uncached(r, n);
    std::unique_lock lock(t.mutex);
    t.values.emplace(key, v);
    return v;
}

} // namespace hjf
