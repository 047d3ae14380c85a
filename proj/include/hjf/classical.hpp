#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/bernoulli.hpp"
#include "hjf/number_theory.hpp"
#include "hjf/qseries.hpp"
#include "hjf/report.hpp"

namespace hjf {

/// Truncated Fourier map (n, r) -> c(n, r) of a form in J_{k,m}, stored
/// densely over r^2 <= 4nm for 0 <= n <= n_max.
class ClassicalJacobiForm {
public:
    ClassicalJacobiForm(int weight, int index, int n_max) : weight_(weight), index_(index) {
        if (index < 1) throw std::invalid_argument("ClassicalJacobiForm: index must be >= 1");
        if (n_max < 0) throw std::invalid_argument("ClassicalJacobiForm: n_max must be >= 0");
        rows_.reserve(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n)
            rows_.emplace_back(static_cast<std::size_t>(2 * radius(n) + 1), Rational(0));
    }

    int weight() const { return weight_; }
    int index() const { return index_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    /// Largest |r| with r^2 <= 4nm.
    std::int64_t radius(int n) const { return isqrt(4LL * n * index_); }

    bool in_support(int n, std::int64_t r) const {
        return n >= 0 && n <= n_max() && r * r <= 4LL * n * index_;
    }

    const Rational& coeff(int n, std::int64_t r) const {
        static const Rational zero(0);
        if (!in_support(n, r)) return zero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + radius(n))];
    }

    void set(int n, std::int64_t r, const Rational& v) { slot(n, r) = v; }
    void add(int n, std::int64_t r, const Rational& v) { slot(n, r) += v; }

    bool is_zero() const {
        for (const auto& row : rows_)
            for (const auto& c : row)
                if (!hjf::is_zero(c)) return false;
        return true;
    }

    ClassicalJacobiForm truncated(int n_max) const {
        if (n_max > this->n_max()) throw std::invalid_argument("ClassicalJacobiForm::truncated: cannot extend");
        ClassicalJacobiForm out(weight_, index_, n_max);
        for (int n = 0; n <= n_max; ++n) out.rows_[static_cast<std::size_t>(n)] = rows_[static_cast<std::size_t>(n)];
        return out;
    }

    /// Visits (n, r, c) for every stored entry, n ascending then r ascending.
    template <class F>
    void for_each(F&& f) const {
        for (int n = 0; n <= n_max(); ++n) {
            const std::int64_t rad = radius(n);
            for (std::int64_t r = -rad; r <= rad; ++r)
                f(n, r, rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + rad)]);
        }
    }

    friend bool operator==(const ClassicalJacobiForm& a, const ClassicalJacobiForm& b) {
        return a.weight_ == b.weight_ && a.index_ == b.index_ && a.rows_ == b.rows_;
    }

private:
    Rational& slot(int n, std::int64_t r) {
        if (!in_support(n, r)) {
            std::ostringstream os;
            os << "classical coefficient (" << n << ", " << r << ") outside r^2 <= 4nm (m = " << index_
               << ", n_max = " << n_max() << ")";
            throw std::out_of_range(os.str());
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + radius(n))];
    }

    int weight_;
    int index_;
    std::vector<std::vector<Rational>> rows_;
};

/// Index-1 Jacobi-Eisenstein series E_{k,1}, c(n, r) = H(k-1, 4n - r^2) / H(k-1, 0).
inline ClassicalJacobiForm jacobi_eisenstein(int k, int n_max) {
    if (k != 4 && k != 6) throw std::invalid_argument("jacobi_eisenstein: only k = 4 and k = 6 are provided");
    ClassicalJacobiForm phi(k, 1, n_max);
    const Rational h0 = cohen_h(k - 1, 0);
    for (int n = 0; n <= n_max; ++n) {
        const std::int64_t rad = phi.radius(n);
        for (std::int64_t r = -rad; r <= rad; ++r) phi.set(n, r, cohen_h(k - 1, 4LL * n - r * r) / h0);
    }
    return phi;
}

/// Product of Jacobi forms; weights and indices add, truncation is the minimum.
inline ClassicalJacobiForm jacobi_product(const ClassicalJacobiForm& a, const ClassicalJacobiForm& b) {
    const int n_max = std::min(a.n_max(), b.n_max());
    ClassicalJacobiForm out(a.weight() + b.weight(), a.index() + b.index(), n_max);
    for (int n1 = 0; n1 <= n_max; ++n1) {
        const std::int64_t r1max = a.radius(n1);
        for (std::int64_t r1 = -r1max; r1 <= r1max; ++r1) {
            const Rational& c1 = a.coeff(n1, r1);
            if (is_zero(c1)) continue;
            for (int n2 = 0; n1 + n2 <= n_max; ++n2) {
                const std::int64_t r2max = b.radius(n2);
                for (std::int64_t r2 = -r2max; r2 <= r2max; ++r2) {
                    const Rational& c2 = b.coeff(n2, r2);
                    if (is_zero(c2)) continue;
                    out.add(n1 + n2, r1 + r2, Rational(c1 * c2));
                }
            }
        }
    }
    return out;
}

/// Action of a modular form on a Jacobi form: convolution in n only.
inline ClassicalJacobiForm scalar_lift(const QSeries<Rational>& f, const ClassicalJacobiForm& phi) {
    const int n_max = std::min(f.n_max(), phi.n_max());
    ClassicalJacobiForm out(f.weight() + phi.weight(), phi.index(), n_max);
    for (int a = 0; a <= n_max; ++a) {
        if (is_zero(f[a])) continue;
        for (int n = 0; a + n <= n_max; ++n) {
            const std::int64_t rad = phi.radius(n);
            for (std::int64_t r = -rad; r <= rad; ++r) {
                const Rational& c = phi.coeff(n, r);
                if (!is_zero(c)) out.add(a + n, r, Rational(f[a] * c));
            }
        }
    }
    return out;
}

/// phi(tau, 0) as a weight-k q-series.
inline QSeries<Rational> specialize_z0(const ClassicalJacobiForm& phi) {
    QSeries<Rational> out(phi.weight(), phi.n_max());
    phi.for_each([&](int n, std::int64_t, const Rational& c) { out[n] += c; });
    return out;
}

/// Checks parity c(n, r) = (-1)^k c(n, -r) and that c depends only on
/// (4nm - r^2, r mod 2m).
inline Report classical_invariant_check(const ClassicalJacobiForm& phi) {
    Report report;
    const int m = phi.index();
    {
        CheckResult parity{"parity", true, ""};
        phi.for_each([&](int n, std::int64_t r, const Rational& c) {
            if (!parity.passed || r <= 0) return;
            const Rational expected = (phi.weight() % 2 == 0) ? c : Rational(-c);
            if (phi.coeff(n, -r) != expected) {
                std::ostringstream os;
                os << "c(" << n << ", " << r << ") = " << c << " but c(" << n << ", " << -r
                   << ") = " << phi.coeff(n, -r);
                parity = {"parity", false, os.str()};
            }
        });
        report.checks.push_back(parity);
    }
    {
        CheckResult law{"discriminant-class", true, ""};
        std::map<std::pair<std::int64_t, std::int64_t>, std::tuple<int, std::int64_t, Rational>> seen;
        phi.for_each([&](int n, std::int64_t r, const Rational& c) {
            if (!law.passed) return;
            const auto key = std::make_pair(4LL * n * m - r * r, mod_floor(r, 2 * m));
            auto [it, inserted] = seen.try_emplace(key, n, r, c);
            if (inserted) return;
            const auto& [n0, r0, c0] = it->second;
            if (c0 != c) {
                std::ostringstream os;
                os << "c(" << n0 << ", " << r0 << ") = " << c0 << " but c(" << n << ", " << r << ") = " << c
                   << " with equal discriminant " << key.first << " and class " << key.second;
                law = {"discriminant-class", false, os.str()};
            }
        });
        report.checks.push_back(law);
    }
    return report;
}

} // namespace hjf
