#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/classical.hpp"
#include "hjf/errors.hpp"
#include "hjf/number_theory.hpp"
#include "hjf/qseries.hpp"
#include "hjf/report.hpp"

namespace hjf {

/// Truncated Fourier map (n, rho) -> c(n, rho) in Q(i) of a Hermitian Jacobi
/// form over Z[i], with rho = 2r the doubled index. Row n is stored as a
/// dense square grid around the disc N(rho) <= 4nm; cells outside the disc
/// can never be written.
class HermitianJacobiForm {
public:
    HermitianJacobiForm(int weight, int index, int n_max, bool unit_invariant = true)
        : weight_(weight), index_(index), unit_invariant_(unit_invariant) {
        if (weight < 0) throw std::invalid_argument("HermitianJacobiForm: weight must be >= 0");
        if (index < 1) throw std::invalid_argument("HermitianJacobiForm: index must be >= 1");
        if (n_max < 0) throw std::invalid_argument("HermitianJacobiForm: n_max must be >= 0");
        rows_.reserve(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            const auto side = static_cast<std::size_t>(2 * radius(n) + 1);
            rows_.emplace_back(side * side);
        }
    }

    int weight() const { return weight_; }
    int index() const { return index_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    bool unit_invariant() const { return unit_invariant_; }
    void set_unit_invariant(bool flag) { unit_invariant_ = flag; }

    /// Stripped constant c with (unnormalized form) = c * (stored form); empty when 1.
    const std::string& normalization() const { return normalization_; }
    void set_normalization(std::string s) { normalization_ = std::move(s); }

    std::int64_t bound(int n) const { return 4LL * n * index_; }
    std::int64_t radius(int n) const { return isqrt(bound(n)); }

    bool in_support(int n, const LatticePoint& rho) const {
        return n >= 0 && n <= n_max() && rho.norm() <= bound(n);
    }

    const GaussianRational& coeff(int n, const LatticePoint& rho) const {
        static const GaussianRational zero;
        if (!in_support(n, rho)) return zero;
        return rows_[static_cast<std::size_t>(n)][cell(n, rho)];
    }

    void set(int n, const LatticePoint& rho, const GaussianRational& v) { slot(n, rho) = v; }
    void add(int n, const LatticePoint& rho, const GaussianRational& v) { slot(n, rho) += v; }

    /// Visits (n, rho, c) over the support, n ascending then rho
    /// lexicographic on (re, im).
    template <class F>
    void for_each(F&& f) const {
        for (int n = 0; n <= n_max(); ++n) {
            const std::int64_t rad = radius(n);
            const std::int64_t b = bound(n);
            for (std::int64_t a = -rad; a <= rad; ++a) {
                const std::int64_t h = isqrt(b - a * a);
                for (std::int64_t c = -h; c <= h; ++c) {
                    const LatticePoint rho{a, c};
                    f(n, rho, rows_[static_cast<std::size_t>(n)][cell(n, rho)]);
                }
            }
        }
    }

    /// Like for_each but skips zero coefficients.
    template <class F>
    void for_each_nonzero(F&& f) const {
        for_each([&](int n, const LatticePoint& rho, const GaussianRational& c) {
            if (!c.is_zero()) f(n, rho, c);
        });
    }

    bool is_zero() const {
        for (const auto& row : rows_)
            for (const auto& c : row)
                if (!c.is_zero()) return false;
        return true;
    }

    /// First nonzero grid cell outside the disc, if any.
    std::optional<std::pair<int, LatticePoint>> stray_entry() const {
        for (int n = 0; n <= n_max(); ++n) {
            const std::int64_t rad = radius(n);
            for (std::int64_t a = -rad; a <= rad; ++a)
                for (std::int64_t b = -rad; b <= rad; ++b) {
                    const LatticePoint rho{a, b};
                    if (!in_support(n, rho) && !rows_[static_cast<std::size_t>(n)][cell(n, rho)].is_zero())
                        return std::make_pair(n, rho);
                }
        }
        return std::nullopt;
    }

    HermitianJacobiForm truncated(int n_max) const {
        if (n_max > this->n_max()) throw std::invalid_argument("HermitianJacobiForm::truncated: cannot extend");
        HermitianJacobiForm out = like(weight_, index_, n_max);
        for (int n = 0; n <= n_max; ++n) out.rows_[static_cast<std::size_t>(n)] = rows_[static_cast<std::size_t>(n)];
        return out;
    }

    /// Same flags and normalization, fresh zero coefficients.
    HermitianJacobiForm like(int weight, int index, int n_max) const {
        HermitianJacobiForm out(weight, index, n_max, unit_invariant_);
        out.normalization_ = normalization_;
        return out;
    }

    friend bool operator==(const HermitianJacobiForm& a, const HermitianJacobiForm& b) {
        return a.weight_ == b.weight_ && a.index_ == b.index_ && a.unit_invariant_ == b.unit_invariant_ &&
               a.rows_ == b.rows_;
    }
    friend bool operator!=(const HermitianJacobiForm& a, const HermitianJacobiForm& b) { return !(a == b); }

private:
    std::size_t cell(int n, const LatticePoint& rho) const {
        const std::int64_t rad = radius(n);
        return static_cast<std::size_t>((rho.re + rad) * (2 * rad + 1) + (rho.im + rad));
    }

    GaussianRational& slot(int n, const LatticePoint& rho) {
        if (!in_support(n, rho)) {
            std::ostringstream os;
            os << "coefficient (" << n << ", " << rho << ") outside N(rho) <= 4nm (m = " << index_
               << ", n_max = " << n_max() << ")";
            throw std::out_of_range(os.str());
        }
        return rows_[static_cast<std::size_t>(n)][cell(n, rho)];
    }

    int weight_;
    int index_;
    bool unit_invariant_;
    std::string normalization_;
    std::vector<std::vector<GaussianRational>> rows_;
};

/// Class of rho modulo 2m Z[i], each component reduced into [-m, m-1].
inline LatticePoint class_representative(const LatticePoint& rho, int m) {
    const std::int64_t mm = m;
    return {mod_floor(rho.re + mm, 2 * mm) - mm, mod_floor(rho.im + mm, 2 * mm) - mm};
}

/// Linear combinations require equal weight and index; truncation is the minimum.
inline HermitianJacobiForm operator+(const HermitianJacobiForm& a, const HermitianJacobiForm& b) {
    if (a.weight() != b.weight() || a.index() != b.index())
        throw std::invalid_argument("sum of Hermitian forms with different weight or index");
    HermitianJacobiForm out = a.like(a.weight(), a.index(), std::min(a.n_max(), b.n_max()));
    out.set_unit_invariant(a.unit_invariant() && b.unit_invariant());
    out.for_each([&](int n, const LatticePoint& rho, const GaussianRational&) {
        GaussianRational s = a.coeff(n, rho) + b.coeff(n, rho);
        if (!s.is_zero()) out.set(n, rho, s);
    });
    return out;
}

inline HermitianJacobiForm operator*(const GaussianRational& s, const HermitianJacobiForm& a) {
    HermitianJacobiForm out = a.like(a.weight(), a.index(), a.n_max());
    a.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) { out.set(n, rho, s * c); });
    return out;
}

inline HermitianJacobiForm operator-(const HermitianJacobiForm& a, const HermitianJacobiForm& b) {
    return a + GaussianRational(Rational(-1)) * b;
}

/// Product of forms: weights and indices add, truncation is the minimum.
inline HermitianJacobiForm operator*(const HermitianJacobiForm& a, const HermitianJacobiForm& b) {
    const int n_max = std::min(a.n_max(), b.n_max());
    HermitianJacobiForm out = a.like(a.weight() + b.weight(), a.index() + b.index(), n_max);
    out.set_unit_invariant(a.unit_invariant() && b.unit_invariant());
    std::vector<std::tuple<int, LatticePoint, GaussianRational>> rhs;
    b.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        if (n <= n_max) rhs.emplace_back(n, rho, c);
    });
    a.for_each_nonzero([&](int n1, const LatticePoint& r1, const GaussianRational& c1) {
        if (n1 > n_max) return;
        for (const auto& [n2, r2, c2] : rhs) {
            if (n1 + n2 > n_max) break;  // rhs is sorted by n
            out.add(n1 + n2, r1 + r2, c1 * c2);
        }
    });
    return out;
}

/// Action of a modular form: convolution in n only, weight adds.
inline HermitianJacobiForm scalar_lift(const QSeries<Rational>& f, const HermitianJacobiForm& phi) {
    const int n_max = std::min(f.n_max(), phi.n_max());
    HermitianJacobiForm out = phi.like(f.weight() + phi.weight(), phi.index(), n_max);
    phi.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        for (int a = 0; a + n <= n_max; ++a)
            if (!is_zero(f[a])) out.add(a + n, rho, c * f[a]);
    });
    return out;
}

/// Multiplies c(n, rho) by (rho/2)^a (conj(rho)/2)^b: the derivative
/// d^a/dz1^a d^b/dz2^b with the factor (2 pi i)^{a+b} stripped. The
/// result is not a Jacobi form, so it is flagged non-invariant.
inline HermitianJacobiForm z_derivative(const HermitianJacobiForm& phi, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("z_derivative: orders must be >= 0");
    HermitianJacobiForm out = phi.like(phi.weight(), phi.index(), phi.n_max());
    out.set_unit_invariant(false);
    const Rational half(1, 2);
    phi.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        const GaussianRational r = to_gaussian_rational(rho) * half;
        GaussianRational v = c;
        for (int t = 0; t < a; ++t) v = v * r;
        for (int t = 0; t < b; ++t) v = v * r.conj();
        if (!v.is_zero()) out.set(n, rho, v);
    });
    return out;
}

/// Support, unit law (when flagged) and class/discriminant law.
inline Report validate(const HermitianJacobiForm& phi) {
    Report report;
    const int m = phi.index();
    {
        CheckResult support{"support", true, ""};
        if (auto w = phi.stray_entry()) {
            std::ostringstream os;
            os << "c(" << w->first << ", " << w->second << ") nonzero outside N(rho) <= 4nm";
            support = {"support", false, os.str()};
        }
        report.checks.push_back(support);
    }
    if (phi.unit_invariant()) {
        CheckResult law{"unit-law", true, ""};
        phi.for_each([&](int n, const LatticePoint& rho, const GaussianRational& c) {
            if (!law.passed) return;
            const LatticePoint irho = mul_i_pow(rho, 1);
            const GaussianRational expected = mul_i_pow(c, -static_cast<long>(phi.weight()));
            if (phi.coeff(n, irho) != expected) {
                std::ostringstream os;
                os << "c(" << n << ", " << irho << ") = " << phi.coeff(n, irho) << " but i^-" << phi.weight()
                   << " c(" << n << ", " << rho << ") = " << expected;
                law = {"unit-law", false, os.str()};
            }
        });
        report.checks.push_back(law);
    }
    {
        CheckResult law{"class-law", true, ""};
        std::map<std::pair<LatticePoint, std::int64_t>, std::tuple<int, LatticePoint, GaussianRational>> seen;
        phi.for_each([&](int n, const LatticePoint& rho, const GaussianRational& c) {
            if (!law.passed) return;
            const auto key = std::make_pair(class_representative(rho, m), phi.bound(n) - rho.norm());
            auto [it, inserted] = seen.try_emplace(key, n, rho, c);
            if (inserted) return;
            const auto& [n0, rho0, c0] = it->second;
            if (c0 != c) {
                std::ostringstream os;
                os << "c(" << n0 << ", " << rho0 << ") = " << c0 << " but c(" << n << ", " << rho << ") = " << c
                   << " with class " << key.first << " and 4nm - N(rho) = " << key.second;
                law = {"class-law", false, os.str()};
            }
        });
        report.checks.push_back(law);
    }
    return report;
}

/// c'(n, rho) = eps^{-k} c(n, conj(eps) rho).
inline HermitianJacobiForm unit_slash(const HermitianJacobiForm& phi, const LatticePoint& eps) {
    const int e = unit_exponent(eps);
    HermitianJacobiForm out = phi.like(phi.weight(), phi.index(), phi.n_max());
    out.for_each([&](int n, const LatticePoint& rho, const GaussianRational&) {
        const GaussianRational& c = phi.coeff(n, mul_i_pow(rho, -e));
        if (!c.is_zero()) out.set(n, rho, mul_i_pow(c, -static_cast<long>(e) * phi.weight()));
    });
    return out;
}

/// Sum of the four unit slashes; the result satisfies the unit law.
inline HermitianJacobiForm unit_average(const HermitianJacobiForm& phi) {
    HermitianJacobiForm out = phi.like(phi.weight(), phi.index(), phi.n_max());
    out.set_unit_invariant(false);
    for (int e = 0; e < 4; ++e) out = out + unit_slash(phi, unit_from_exponent(e));
    out.set_unit_invariant(true);
    return out;
}

/// phi1(tau, (z1+z2)/2) phi2(tau, i(z1-z2)/2) as a form in the eps = 1
/// space: c(n, rho) = sum c1(n1, Re rho) c2(n2, Im rho).
inline HermitianJacobiForm hmap_pre_average(const ClassicalJacobiForm& phi1, const ClassicalJacobiForm& phi2) {
    if (phi1.index() != phi2.index()) throw std::invalid_argument("hmap: indices differ");
    const int n_max = std::min(phi1.n_max(), phi2.n_max());
    HermitianJacobiForm out(phi1.weight() + phi2.weight(), phi1.index(), n_max, false);
    for (int n1 = 0; n1 <= n_max; ++n1) {
        const std::int64_t t_max = phi1.radius(n1);
        for (std::int64_t t = -t_max; t <= t_max; ++t) {
            const Rational& c1 = phi1.coeff(n1, t);
            if (is_zero(c1)) continue;
            for (int n2 = 0; n1 + n2 <= n_max; ++n2) {
                const std::int64_t s_max = phi2.radius(n2);
                for (std::int64_t s = -s_max; s <= s_max; ++s) {
                    const Rational& c2 = phi2.coeff(n2, s);
                    if (!is_zero(c2)) out.add(n1 + n2, {t, s}, GaussianRational(Rational(c1 * c2)));
                }
            }
        }
    }
    return out;
}

/// H(phi1, phi2): the pre-average product summed over the units.
inline HermitianJacobiForm hmap(const ClassicalJacobiForm& phi1, const ClassicalJacobiForm& phi2) {
    return unit_average(hmap_pre_average(phi1, phi2));
}

/// (U phi)(tau, z1, z2) = phi(tau, rho0 z1, conj(rho0) z2); index m N(rho0).
inline HermitianJacobiForm u_rho(const HermitianJacobiForm& phi, const LatticePoint& rho0) {
    if (rho0.is_zero()) throw std::invalid_argument("u_rho: rho0 must be nonzero");
    HermitianJacobiForm out = phi.like(phi.weight(), static_cast<int>(phi.index() * rho0.norm()), phi.n_max());
    phi.for_each_nonzero(
        [&](int n, const LatticePoint& rho, const GaussianRational& c) { out.set(n, rho * rho0, c); });
    return out;
}

/// phi(tau, z, z) as a classical form; the classical index is t = Re rho.
/// Throws InvariantViolation if a coefficient is not rational.
inline ClassicalJacobiForm restrict_diagonal(const HermitianJacobiForm& phi) {
    ClassicalJacobiForm out(phi.weight(), phi.index(), phi.n_max());
    for (int n = 0; n <= phi.n_max(); ++n) {
        const std::int64_t rad = out.radius(n);
        for (std::int64_t t = -rad; t <= rad; ++t) {
            GaussianRational s;
            const std::int64_t h = isqrt(phi.bound(n) - t * t);
            for (std::int64_t b = -h; b <= h; ++b) s += phi.coeff(n, {t, b});
            if (!s.is_real()) {
                std::ostringstream os;
                os << "restriction coefficient (" << n << ", " << t << ") = " << s << " is not rational";
                throw InvariantViolation(os.str());
            }
            out.set(n, t, s.re);
        }
    }
    return out;
}

/// V_l: c'(n, rho) = sum over a | gcd(n, l), a | rho of a^{k-1} c(nl/a^2, rho/a);
/// index ml, truncation floor(n_max / l).
inline HermitianJacobiForm v_l(const HermitianJacobiForm& phi, int l) {
    if (l <= 0) throw std::invalid_argument("v_l: l must be positive");
    const int n_out = phi.n_max() / l;
    HermitianJacobiForm out = phi.like(phi.weight(), phi.index() * l, n_out);
    std::map<std::int64_t, Rational> powers;
    out.for_each([&](int n, const LatticePoint& rho, const GaussianRational&) {
        GaussianRational s;
        for (std::int64_t a : divisors(gcd64(n, l))) {
            if (rho.re % a != 0 || rho.im % a != 0) continue;
            auto it = powers.find(a);
            if (it == powers.end())
                it = powers.emplace(a, Rational(pow_int(Integer(static_cast<long>(a)),
                                                        static_cast<unsigned long>(phi.weight() - 1))))
                         .first;
            const auto src = static_cast<int>(static_cast<std::int64_t>(n) * l / (a * a));
            const GaussianRational& c = phi.coeff(src, {rho.re / a, rho.im / a});
            if (!c.is_zero()) s += c * it->second;
        }
        if (!s.is_zero()) out.set(n, rho, s);
    });
    return out;
}

/// m1 phi psi_(2) - m2 psi phi_(2) with d/dz2 normalised by (2 pi i)^{-1};
/// weight k1 + k2 + 1, index m1 + m2.
inline HermitianJacobiForm diff_construct_1(const HermitianJacobiForm& phi, const HermitianJacobiForm& psi) {
    if (!phi.unit_invariant() || !psi.unit_invariant())
        throw std::invalid_argument("diff_construct_1: inputs must be unit invariant");
    const GaussianRational m1(Rational(phi.index())), m2(Rational(psi.index()));
    HermitianJacobiForm left = m1 * (phi * z_derivative(psi, 0, 1));
    HermitianJacobiForm right = m2 * (psi * z_derivative(phi, 0, 1));
    HermitianJacobiForm out = left - right;
    HermitianJacobiForm result(phi.weight() + psi.weight() + 1, out.index(), out.n_max(), true);
    out.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) { result.set(n, rho, c); });
    result.set_normalization("(2*pi*i)");
    return result;
}

/// (m1 phi psi_1 - m2 psi phi_1)^2 + m1 phi^2 (psi_1^2 - psi psi_11)
///   + m2 psi^2 (phi_1^2 - phi phi_11)
/// with d/dz1 normalised by (2 pi i)^{-1}; weight 2(k1 + k2 + 1), index 2(m1 + m2).
inline HermitianJacobiForm diff_construct_2(const HermitianJacobiForm& phi, const HermitianJacobiForm& psi) {
    if (!phi.unit_invariant() || !psi.unit_invariant())
        throw std::invalid_argument("diff_construct_2: inputs must be unit invariant");
    const GaussianRational m1(Rational(phi.index())), m2(Rational(psi.index()));
    const HermitianJacobiForm phi1 = z_derivative(phi, 1, 0), phi11 = z_derivative(phi, 2, 0);
    const HermitianJacobiForm psi1 = z_derivative(psi, 1, 0), psi11 = z_derivative(psi, 2, 0);
    const HermitianJacobiForm a = m1 * (phi * psi1) - m2 * (psi * phi1);
    const HermitianJacobiForm b = m1 * ((phi * phi) * (psi1 * psi1 - psi * psi11));
    const HermitianJacobiForm c = m2 * ((psi * psi) * (phi1 * phi1 - phi * phi11));
    const HermitianJacobiForm total = a * a + b + c;
    HermitianJacobiForm result(2 * (phi.weight() + psi.weight() + 1), total.index(), total.n_max(), true);
    total.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& v) { result.set(n, rho, v); });
    result.set_normalization("(2*pi*i)^2");
    return result;
}

} // namespace hjf
