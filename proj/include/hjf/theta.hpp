#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/errors.hpp"
#include "hjf/hermitian.hpp"
#include "hjf/number_theory.hpp"

namespace hjf {

/// Component series c_s(L) of phi = sum_s h_s theta_{m,s}, one per class
/// s of rho modulo 2m Z[i]. Each component stores every admissible
/// L = 4nm - N(rho) (L >= 0, L = -N(s) mod 4m) reachable within n_max.
struct ThetaDecomposition {
    int weight = 0;
    int index = 1;
    int n_max = 0;
    bool unit_invariant = true;
    std::vector<LatticePoint> classes;                               ///< box [-m, m-1]^2, lexicographic
    std::vector<std::map<std::int64_t, GaussianRational>> components;  ///< parallel to classes

    /// All-zero decomposition with the admissible L-ranges filled in.
    static ThetaDecomposition zero(int weight, int index, int n_max, bool unit_invariant = true) {
        if (index < 1) throw std::invalid_argument("ThetaDecomposition: index must be >= 1");
        if (n_max < 0) throw std::invalid_argument("ThetaDecomposition: n_max must be >= 0");
        ThetaDecomposition dec;
        dec.weight = weight;
        dec.index = index;
        dec.n_max = n_max;
        dec.unit_invariant = unit_invariant;
        const std::int64_t m = index;
        for (std::int64_t p = -m; p < m; ++p)
            for (std::int64_t q = -m; q < m; ++q) {
                const LatticePoint s{p, q};
                std::map<std::int64_t, GaussianRational> comp;
                for (std::int64_t l = mod_floor(-s.norm(), 4 * m); l <= 4 * n_max * m - s.norm(); l += 4 * m)
                    comp.emplace(l, GaussianRational());
                dec.classes.push_back(s);
                dec.components.push_back(std::move(comp));
            }
        return dec;
    }

    std::size_t class_slot(const LatticePoint& s) const {
        const std::int64_t m = index;
        if (s.re < -m || s.re >= m || s.im < -m || s.im >= m)
            throw std::invalid_argument("ThetaDecomposition: class representative outside [-m, m-1]^2");
        return static_cast<std::size_t>((s.re + m) * 2 * m + (s.im + m));
    }

    /// c_s(L), zero when L is not admissible for s.
    const GaussianRational& component(const LatticePoint& s, std::int64_t l) const {
        static const GaussianRational zero_value;
        const auto& comp = components[class_slot(s)];
        auto it = comp.find(l);
        return it == comp.end() ? zero_value : it->second;
    }

    void set(const LatticePoint& s, std::int64_t l, const GaussianRational& v) {
        auto& comp = components[class_slot(s)];
        auto it = comp.find(l);
        if (it == comp.end()) {
            std::ostringstream os;
            os << "L = " << l << " is not admissible for class " << s << " (m = " << index << ", n_max = " << n_max
               << ")";
            throw std::invalid_argument(os.str());
        }
        it->second = v;
    }

    friend bool operator==(const ThetaDecomposition& a, const ThetaDecomposition& b) {
        return a.weight == b.weight && a.index == b.index && a.n_max == b.n_max &&
               a.unit_invariant == b.unit_invariant && a.classes == b.classes && a.components == b.components;
    }
};

/// Reads c_s(L) off phi; throws ClassLawViolation when two coefficients
/// with the same class and L differ.
inline ThetaDecomposition theta_decompose(const HermitianJacobiForm& phi) {
    ThetaDecomposition dec = ThetaDecomposition::zero(phi.weight(), phi.index(), phi.n_max(), phi.unit_invariant());
    const int m = phi.index();
    std::map<std::pair<LatticePoint, std::int64_t>, std::pair<int, LatticePoint>> origin;
    phi.for_each([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        const LatticePoint s = class_representative(rho, m);
        const std::int64_t l = phi.bound(n) - rho.norm();
        auto [it, inserted] = origin.try_emplace({s, l}, n, rho);
        if (inserted) {
            dec.set(s, l, c);
            return;
        }
        if (dec.component(s, l) != c) {
            const auto& [n0, rho0] = it->second;
            std::ostringstream os;
            os << "class " << s << ", L = " << l << ": c(" << n0 << ", " << rho0 << ") = " << dec.component(s, l)
               << " but c(" << n << ", " << rho << ") = " << c;
            throw ClassLawViolation(os.str());
        }
    });
    return dec;
}

/// c(n, rho) = c_{class(rho)}(4nm - N(rho)).
inline HermitianJacobiForm theta_reconstruct(const ThetaDecomposition& dec, int k, int n_max) {
    if (n_max > dec.n_max) {
        std::ostringstream os;
        os << "theta_reconstruct: decomposition covers n <= " << dec.n_max << ", requested " << n_max;
        throw InsufficientTruncation(os.str());
    }
    HermitianJacobiForm out(k, dec.index, n_max, dec.unit_invariant);
    out.for_each([&](int n, const LatticePoint& rho, const GaussianRational&) {
        const GaussianRational& c = dec.component(class_representative(rho, dec.index), out.bound(n) - rho.norm());
        if (!c.is_zero()) out.set(n, rho, c);
    });
    return out;
}

struct SpezResult {
    bool value = true;
    std::string witness;  ///< two coefficients with equal 4nm - N(rho) that differ
};

/// True iff c(n, rho) depends only on 4nm - N(rho), across all classes.
inline SpezResult is_spezialschar(const HermitianJacobiForm& phi) {
    SpezResult result;
    std::map<std::int64_t, std::tuple<int, LatticePoint, GaussianRational>> seen;
    phi.for_each([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        if (!result.value) return;
        const std::int64_t l = phi.bound(n) - rho.norm();
        auto [it, inserted] = seen.try_emplace(l, n, rho, c);
        if (inserted) return;
        const auto& [n0, rho0, c0] = it->second;
        if (c0 != c) {
            std::ostringstream os;
            os << "c(" << n0 << ", " << rho0 << ") = " << c0 << " but c(" << n << ", " << rho << ") = " << c
               << " with 4nm - N(rho) = " << l;
            result = {false, os.str()};
        }
    });
    return result;
}

/// kappa(k, m) = floor(4m^2 (k-1)/3 prod_{p | 4m} (1 - 1/p^2) + m/2), computed
/// directly and as floor(omega / m) with omega = [SL2(Z) : Gamma(4m)] (k-1)/48 + m^2/2.
inline std::int64_t kappa(int k, int m) {
    if (k < 2) throw std::invalid_argument("kappa: k must be >= 2");
    if (m < 1) throw std::invalid_argument("kappa: m must be >= 1");
    Rational euler = 1;
    for (auto [p, e] : factorize(4LL * m)) euler *= Rational(1) - Rational(1, static_cast<unsigned long>(p * p));
    const Rational mm(m);
    const Rational direct = Rational(4) * mm * mm * Rational(k - 1) / Rational(3) * euler + mm / Rational(2);
    const Rational level_index = Rational(64) * mm * mm * mm * euler;
    const Rational omega = level_index * Rational(k - 1) / Rational(48) + mm * mm / Rational(2);
    const Integer a = floor_of(direct), b = floor_of(Rational(omega / mm));
    if (a != b) throw std::logic_error("kappa: the two formulas disagree");
    return a.get_si();
}

/// R_m(l) = sum_{0 <= n <= l/4m} #{x in Z[i] : N(x) <= 4mn}.
inline std::int64_t big_r(int m, std::int64_t l) {
    if (m < 1) throw std::invalid_argument("big_r: m must be >= 1");
    if (l < 0 || l % (4LL * m) != 0) throw std::invalid_argument("big_r: l must be a non-negative multiple of 4m");
    std::int64_t total = 0;
    for (std::int64_t n = 0; n <= l / (4LL * m); ++n) total += count_norm_le(4LL * m * n);
    return total;
}

/// Whether every coefficient with n <= kappa(k, m) vanishes.
inline bool determination_check(const HermitianJacobiForm& phi) {
    const std::int64_t kap = kappa(phi.weight(), phi.index());
    if (phi.n_max() < kap) {
        std::ostringstream os;
        os << "determination_check: needs n_max >= kappa = " << kap << ", have " << phi.n_max();
        throw InsufficientTruncation(os.str());
    }
    bool vanish = true;
    phi.for_each([&](int n, const LatticePoint&, const GaussianRational& c) {
        if (n <= kap && !c.is_zero()) vanish = false;
    });
    return vanish;
}

} // namespace hjf
