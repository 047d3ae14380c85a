#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hjf/arith.hpp"

namespace hjf {

/// Remainder in [0, |b|).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
    std::int64_t r = a % b;
    return r < 0 ? r + (b < 0 ? -b : b) : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Prime factorisation by trial division, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Positive divisors of n >= 1, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline Integer sigma(std::int64_t n, unsigned long k) {
    Integer s = 0;
    for (std::int64_t d : divisors(n)) s += pow_int(Integer(static_cast<long>(d)), k);
    return s;
}

inline int mobius(std::int64_t n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

/// Kronecker symbol (a/n) for n >= 1.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        std::int64_t r = mod_floor(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol for odd n
    std::int64_t x = mod_floor(a, n);
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

/// Writes disc = D * f^2 with D a fundamental discriminant (or 1); disc must
/// be nonzero and congruent to 0 or 1 mod 4.
inline std::pair<std::int64_t, std::int64_t> fundamental_decomposition(std::int64_t disc) {
    if (disc == 0 || (mod_floor(disc, 4) != 0 && mod_floor(disc, 4) != 1))
        throw std::invalid_argument("not a discriminant");
    std::int64_t f = 1;
    for (auto [p, e] : factorize(disc < 0 ? -disc : disc))
        for (int i = 0; i < e / 2; ++i) f *= p;
    std::int64_t d = disc / (f * f);
    if (mod_floor(d, 4) != 1) {
        d *= 4;
        f /= 2;
    }
    return {d, f};
}

struct CircleCount {
    std::int64_t count;  ///< r(n): integral solutions of x^2 + y^2 = n
    std::int64_t delta;  ///< sum over d | n of the character mod 4; 0 as a sentinel for n = 0
};

/// r(n) by direct lattice count and delta(n) by divisor sum; r(n) = 4 delta(n)
/// is asserted for n >= 1.
inline CircleCount r2_and_delta(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("r2_and_delta: n must be >= 0");
    std::int64_t count = 0;
    const std::int64_t r = isqrt(n);
    for (std::int64_t x = -r; x <= r; ++x) {
        std::int64_t rest = n - x * x;
        std::int64_t y = isqrt(rest);
        if (y * y == rest) count += (y == 0) ? 1 : 2;
    }
    if (n == 0) return {count, 0};
    std::int64_t delta = 0;
    for (std::int64_t d : divisors(n)) {
        if (d % 4 == 1) ++delta;
        else if (d % 4 == 3) --delta;
    }
    if (count != 4 * delta) throw std::logic_error("r(n) != 4 delta(n)");
    return {count, delta};
}

} // namespace hjf
