#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hjf/arith.hpp"

namespace hjf {

/// Truncated q-expansion sum_{n=0}^{n_max} a(n) q^n with a tracked weight.
/// Every index in [0, n_max] is stored; absent coefficients are explicit zeros.
template <class Coeff = Rational>
class QSeries {
public:
    QSeries() = default;
    QSeries(int weight, int n_max) : weight_(weight), coeffs_(static_cast<std::size_t>(n_max) + 1) {
        if (weight < 0) throw std::invalid_argument("QSeries: weight must be >= 0");
        if (n_max < 0) throw std::invalid_argument("QSeries: n_max must be >= 0");
    }
    QSeries(int weight, std::vector<Coeff> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {
        if (weight < 0) throw std::invalid_argument("QSeries: weight must be >= 0");
        if (coeffs_.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
    }

    int weight() const { return weight_; }
    int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Coeff& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    Coeff& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return hjf::is_zero(c); });
    }

    QSeries truncated(int n_max) const {
        if (n_max > this->n_max()) throw std::invalid_argument("QSeries::truncated: cannot extend");
        return QSeries(weight_, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + n_max + 1));
    }

    QSeries with_weight(int w) const { return QSeries(w, coeffs_); }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
    }

    // Sums keep the left operand's weight; the shorter truncation wins.
    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        const int n = std::min(a.n_max(), b.n_max());
        QSeries out(a.weight_, n);
        for (int i = 0; i <= n; ++i) out[i] = a[i] + b[i];
        return out;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        const int n = std::min(a.n_max(), b.n_max());
        QSeries out(a.weight_, n);
        for (int i = 0; i <= n; ++i) out[i] = a[i] - b[i];
        return out;
    }
    template <class S>
    friend QSeries operator*(const S& s, const QSeries& a) {
        QSeries out = a;
        for (auto& c : out.coeffs_) c = Coeff(c * s);
        return out;
    }

    /// Cauchy product; weights add.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const int n = std::min(a.n_max(), b.n_max());
        QSeries out(a.weight_ + b.weight_, n);
        for (int i = 0; i <= n; ++i) {
            if (hjf::is_zero(a[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (hjf::is_zero(b[j])) continue;
                out[i + j] += Coeff(a[i] * b[j]);
            }
        }
        return out;
    }

private:
    int weight_ = 0;
    std::vector<Coeff> coeffs_{Coeff()};
};

inline QSeries<GaussianRational> to_gaussian(const QSeries<Rational>& f) {
    std::vector<GaussianRational> c;
    c.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) c.emplace_back(a, Rational(0));
    return QSeries<GaussianRational>(f.weight(), std::move(c));
}

/// Real and imaginary parts as separate rational series.
inline std::pair<QSeries<Rational>, QSeries<Rational>> split_parts(const QSeries<GaussianRational>& f) {
    QSeries<Rational> re(f.weight(), f.n_max()), im(f.weight(), f.n_max());
    for (int n = 0; n <= f.n_max(); ++n) {
        re[n] = f[n].re;
        im[n] = f[n].im;
    }
    return {re, im};
}

} // namespace hjf
