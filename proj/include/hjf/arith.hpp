#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hjf {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(std::int64_t x) { return x == 0; }

/// Canonical "p/q" (or "p") text; parse_rational accepts the same forms.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Element re + im*i of Z[i] or Q(i), depending on T.
template <class T>
struct Gaussian {
    T re{};
    T im{};

    Gaussian() = default;
    Gaussian(T r) : re(std::move(r)), im(0) {}
    Gaussian(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return hjf::is_zero(re) && hjf::is_zero(im); }
    bool is_real() const { return hjf::is_zero(im); }

    Gaussian conj() const { return {re, T(-im)}; }
    T norm() const { return T(re * re + im * im); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator*=(const T& s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator-(const Gaussian& a) { return {T(-a.re), T(-a.im)}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        // skip the cross terms for real operands; most coefficients are real
        if (hjf::is_zero(a.im) && hjf::is_zero(b.im)) return {T(a.re * b.re), T(0)};
        return {T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re)};
    }
    friend Gaussian operator*(Gaussian a, const T& s) { return a *= s; }
    friend Gaussian operator*(const T& s, Gaussian a) { return a *= s; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    /// Lexicographic on (re, im).
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
        return os << '(' << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
    }
};

using GaussianInteger = Gaussian<Integer>;
using GaussianRational = Gaussian<Rational>;

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

/// Fourier index of a Hermitian form, stored doubled: rho = 2r lies in Z[i]
/// for every r in the inverse different (i/2)Z[i].
using LatticePoint = Gaussian<std::int64_t>;

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational nb = b.norm();
    if (is_zero(nb)) throw std::domain_error("division by zero in Q(i)");
    GaussianRational p = a * b.conj();
    return {Rational(p.re / nb), Rational(p.im / nb)};
}

inline GaussianRational to_gaussian_rational(const LatticePoint& x) {
    return {Rational(static_cast<long>(x.re)), Rational(static_cast<long>(x.im))};
}

/// z * i^e for any integer e.
template <class T>
Gaussian<T> mul_i_pow(const Gaussian<T>& z, long e) {
    switch (((e % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {T(-z.im), z.re};
    case 2: return {T(-z.re), T(-z.im)};
    default: return {z.im, T(-z.re)};
    }
}

/// Exponent e in {0,1,2,3} with u = i^e; throws for non-units.
inline int unit_exponent(const LatticePoint& u) {
    if (u.re == 1 && u.im == 0) return 0;
    if (u.re == 0 && u.im == 1) return 1;
    if (u.re == -1 && u.im == 0) return 2;
    if (u.re == 0 && u.im == -1) return 3;
    throw std::invalid_argument("not a unit of Z[i]");
}

inline LatticePoint unit_from_exponent(int e) {
    return mul_i_pow(LatticePoint{1, 0}, e);
}

/// re^2 + im^2.
inline Integer gauss_norm(const GaussianInteger& x) { return x.norm(); }

/// True when d divides x in Z[i]; the quotient is written to q.
inline bool divides(const LatticePoint& d, const LatticePoint& x, LatticePoint& q) {
    std::int64_t nd = d.norm();
    if (nd == 0) return false;
    LatticePoint p = x * d.conj();
    if (p.re % nd != 0 || p.im % nd != 0) return false;
    q = {p.re / nd, p.im / nd};
    return true;
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Every x in Z[i] with N(x) <= bound, each once, ordered lexicographically on (re, im).
inline std::vector<LatticePoint> enumerate_norm_le(std::int64_t bound) {
    std::vector<LatticePoint> out;
    if (bound < 0) return out;
    const std::int64_t r = isqrt(bound);
    for (std::int64_t a = -r; a <= r; ++a) {
        const std::int64_t h = isqrt(bound - a * a);
        for (std::int64_t b = -h; b <= h; ++b) out.push_back({a, b});
    }
    return out;
}

/// Number of x in Z[i] with N(x) <= bound.
inline std::int64_t count_norm_le(std::int64_t bound) {
    if (bound < 0) return 0;
    std::int64_t count = 0;
    const std::int64_t r = isqrt(bound);
    for (std::int64_t a = -r; a <= r; ++a) count += 2 * isqrt(bound - a * a) + 1;
    return count;
}

/// a^{(b)} = (a+b-1)!/(b-1)!, the product b(b+1)...(a+b-1).
inline Integer rising(long a, long b) {
    if (b < 1) throw std::invalid_argument("rising: b must be >= 1");
    if (a < 0) throw std::invalid_argument("rising: a must be >= 0");
    Integer r = 1;
    for (long t = b; t <= a + b - 1; ++t) r *= t;
    return r;
}

} // namespace hjf
