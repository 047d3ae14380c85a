#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjf/arith.hpp"
#include "hjf/errors.hpp"
#include "hjf/modforms.hpp"
#include "hjf/qseries.hpp"
#include "hjf/report.hpp"

namespace hjf {

/// Target coefficient (n, rho) of D_nu^* f for f in S_{k+2nu}, summed over
/// lattice points lambda with N(m lambda + conj(r)) <= m^2 lambda_max.
struct AdjointQuery {
    int k = 8;
    int nu = 2;
    int m = 1;
    int n = 1;
    LatticePoint rho{0, 0};
    QSeries<Rational> f;
    double lambda_max = 100;
    double epsilon = 0;  ///< exponent slack in the fitted coefficient bound
};

/// Neumaier-compensated running sum.
template <class Float>
class CompensatedSum {
public:
    void add(Float x) {
        const Float t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Float value() const { return sum_ + comp_; }

private:
    Float sum_ = 0;
    Float comp_ = 0;
};

/// Rational to Float via a double head and a double correction.
template <class Float>
Float to_float(const Rational& q) {
    const double hi = q.get_d();
    const double lo = Rational(q - Rational(hi)).get_d();
    return static_cast<Float>(hi) + static_cast<Float>(lo);
}

/// lambda = m^{k-4} Gamma(k-2) / ((4 pi)^{k-3} (mn - N(r))^{k-3}).
template <class Float = long double>
Float poincare_norm_constant(int k, int m, int n, const LatticePoint& rho) {
    if (k <= 4) throw std::invalid_argument("poincare_norm_constant: k must be > 4");
    if (m < 1) throw std::invalid_argument("poincare_norm_constant: m must be >= 1");
    const Rational d = Rational(static_cast<long>(m) * n) - ratio(static_cast<long>(rho.norm()), 4);
    if (sgn(d) <= 0) throw std::invalid_argument("poincare_norm_constant: needs 4nm > N(rho)");
    const Float pi = std::numbers::pi_v<Float>;
    using std::exp, std::log, std::lgamma;
    return exp(static_cast<Float>(k - 4) * log(static_cast<Float>(m)) + lgamma(static_cast<Float>(k - 2)) -
               static_cast<Float>(k - 3) * (log(4 * pi) + log(to_float<Float>(d))));
}

template <class Float>
struct AdjointResult {
    std::complex<Float> value;     ///< truncated lambda-sum, closed-form prefactor
    Float tail_bound = 0;          ///< bound on the omitted lambda terms
    Float prefactor = 0;
    Float assembled = 0;           ///< same coefficient via the Poincare-series expansion
    Float path_ratio = 0;          ///< assembled / value.real()
    bool paths_agree = false;      ///< |ratio - 1| within 1e-8
    Float coefficient_bound = 0;   ///< fitted C with |a(T)| <= C T^{w/2 + eps}
    std::int64_t lattice_points = 0;
    std::int64_t max_t = 0;
};

namespace detail {

/// lambda with N(2m lambda + conj(rho)) <= 4 m^2 lambda_max.
inline std::vector<LatticePoint> adjoint_lattice(int m, const LatticePoint& rho, double lambda_max) {
    const auto bound = static_cast<std::int64_t>(std::floor(4.0 * m * m * lambda_max));
    const long double radius = std::sqrt(static_cast<long double>(lambda_max)) + 2;
    const long double cx = -static_cast<long double>(rho.re) / (2 * m);
    const long double cy = static_cast<long double>(rho.im) / (2 * m);
    std::vector<LatticePoint> out;
    for (auto a = static_cast<std::int64_t>(std::floor(cx - radius)); a <= static_cast<std::int64_t>(std::ceil(cx + radius)); ++a)
        for (auto b = static_cast<std::int64_t>(std::floor(cy - radius));
             b <= static_cast<std::int64_t>(std::ceil(cy + radius)); ++b) {
            const LatticePoint w{2LL * m * a + rho.re, 2LL * m * b - rho.im};
            if (w.norm() <= bound) out.push_back({a, b});
        }
    return out;
}

} // namespace detail

/// Fourier coefficient of D_nu^* f at (n, rho = 2r):
///   nu! (-1)^nu (4 pi)^{2nu-1} Gamma(k+2nu-1) m^{nu-k+3} (nm - N(r))^{k-2} / (Gamma(k-2) (k-1)^(nu))
///   * sum_lambda a(T) / T^{k+nu-1} sum_j (-1)^j (k-1)^(2nu-j) / ((nu-j)!^2 j!) (N(m lambda + conj r) / (mT))^{nu-j}
/// with T = m N(lambda) + Re(rho lambda) + n and a^(b) = (a+b-1)!/(b-1)!.
template <class Float = long double>
AdjointResult<Float> adjoint_coefficient(const AdjointQuery& q) {
    const int k = q.k, nu = q.nu, m = q.m, n = q.n;
    if (k <= 4 || k % 4 != 0) throw std::invalid_argument("adjoint_coefficient: k must be > 4 and divisible by 4");
    if (nu < 1) throw std::invalid_argument("adjoint_coefficient: nu must be >= 1");
    if (m < 1) throw std::invalid_argument("adjoint_coefficient: m must be >= 1");
    if (q.lambda_max <= 2) throw std::invalid_argument("adjoint_coefficient: lambda_max must exceed 2");
    const std::int64_t disc4 = 4LL * n * m - q.rho.norm();  // 4(nm - N(r))
    if (disc4 <= 0) throw std::invalid_argument("adjoint_coefficient: needs 4nm > N(rho)");
    if (q.f.weight() != k + 2 * nu) throw std::invalid_argument("adjoint_coefficient: f must have weight k + 2nu");
    {
        const int head = std::min(q.f.n_max(), std::max(40, (k + 2 * nu) / 12 + 1));
        if (!certify_membership(q.f.truncated(head), k + 2 * nu, true).certified)
            throw std::invalid_argument("adjoint_coefficient: f does not certify as a cusp form of weight k + 2nu");
    }

    const auto lattice = detail::adjoint_lattice(m, q.rho, q.lambda_max);
    std::int64_t max_t = 0;
    for (const auto& lam : lattice) {
        // T = m N(lambda) + Re(rho lambda) + n
        const std::int64_t t = m * lam.norm() + (q.rho.re * lam.re - q.rho.im * lam.im) + n;
        max_t = std::max(max_t, t);
    }
    if (max_t > q.f.n_max()) {
        std::ostringstream os;
        os << "adjoint_coefficient: cusp form stores a(T) for T <= " << q.f.n_max() << ", the lambda-sum needs T <= "
           << max_t;
        throw InsufficientCuspFormTruncation(os.str(), max_t);
    }

    using std::exp, std::log, std::lgamma, std::pow, std::fabs;
    const Float pi = std::numbers::pi_v<Float>;
    const Float four_pi = 4 * pi;
    const Float dnr = static_cast<Float>(disc4) / 4;  // nm - N(r)
    const Float fm = static_cast<Float>(m);

    const Float log_pref = static_cast<Float>(2 * nu - 1) * log(four_pi) + lgamma(static_cast<Float>(k + 2 * nu - 1)) +
                           static_cast<Float>(nu - k + 3) * log(fm) + static_cast<Float>(k - 2) * log(dnr) -
                           lgamma(static_cast<Float>(k - 2)) - log(to_float<Float>(Rational(rising(k - 1, nu))));
    const Float prefactor = to_float<Float>(Rational(factorial(static_cast<unsigned long>(nu)))) *
                            (nu % 2 == 0 ? 1 : -1) * exp(log_pref);

    std::vector<Float> inner(static_cast<std::size_t>(nu) + 1);  // path A j-weights
    std::vector<Float> outer(static_cast<std::size_t>(nu) + 1);  // path B j-weights
    Float j_total = 0;
    for (int j = 0; j <= nu; ++j) {
        const Rational fj(factorial(static_cast<unsigned long>(j)));
        const Rational fnj(factorial(static_cast<unsigned long>(nu - j)));
        const Rational a = Rational(rising(k - 1, 2 * nu - j)) / (fnj * fnj * fj);
        inner[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1 : -1) * to_float<Float>(a);
        j_total += to_float<Float>(a);
        const Rational b = Rational(factorial(static_cast<unsigned long>(k + 2 * nu - j - 2)) *
                                    factorial(static_cast<unsigned long>(nu))) /
                           (fj * fnj * fnj * Rational(factorial(static_cast<unsigned long>(k + nu - 2))));
        outer[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1 : -1) * to_float<Float>(b) *
                                             pow(four_pi, static_cast<Float>(2 * nu));
    }

    CompensatedSum<Float> sum_a, sum_b;
    const int w = k + 2 * nu;
    for (const auto& lam : lattice) {
        const std::int64_t t = m * lam.norm() + (q.rho.re * lam.re - q.rho.im * lam.im) + n;
        const Rational& at = q.f[static_cast<int>(t)];
        if (is_zero(at)) continue;
        const LatticePoint v{2LL * m * lam.re + q.rho.re, 2LL * m * lam.im - q.rho.im};
        const Float big_n = static_cast<Float>(v.norm()) / 4;  // N(m lambda + conj r)
        const Float ft = static_cast<Float>(t);
        const Float a_t = to_float<Float>(at);
        const Float x = big_n / (fm * ft);
        Float ja = 0, jb = 0;
        for (int j = 0; j <= nu; ++j) {
            ja += inner[static_cast<std::size_t>(j)] * pow(x, static_cast<Float>(nu - j));
            jb += outer[static_cast<std::size_t>(j)] * pow(big_n, static_cast<Float>(nu - j)) *
                  pow(fm * ft, static_cast<Float>(j));
        }
        sum_a.add(a_t / pow(ft, static_cast<Float>(k + nu - 1)) * ja);
        // (f, P_T^w) = a(T) Gamma(w-1) / (4 pi T)^{w-1}
        sum_b.add(jb * a_t * exp(lgamma(static_cast<Float>(w - 1)) - static_cast<Float>(w - 1) * log(four_pi * ft)));
    }

    AdjointResult<Float> res;
    res.prefactor = prefactor;
    res.value = {prefactor * sum_a.value(), Float(0)};
    res.assembled = sum_b.value() / poincare_norm_constant<Float>(k, m, n, q.rho);
    res.path_ratio = res.value.real() != 0 ? res.assembled / res.value.real() : Float(0);
    res.paths_agree = fabs(res.path_ratio - 1) <= Float(1e-8);
    res.lattice_points = static_cast<std::int64_t>(lattice.size());
    res.max_t = max_t;

    // |a(T)| <= C T^{w/2 + eps} fitted on the stored coefficients; then each
    // omitted term is at most C J (m t^2)^{-s}, t = |lambda + conj(r)/m|.
    Float c_fit = 0;
    for (int t = 1; t <= q.f.n_max(); ++t) {
        const Float a = fabs(to_float<Float>(q.f[t]));
        if (a == 0) continue;
        c_fit = std::max(c_fit, a / pow(static_cast<Float>(t), static_cast<Float>(w) / 2 + static_cast<Float>(q.epsilon)));
    }
    res.coefficient_bound = c_fit;
    const Float s = static_cast<Float>(k) / 2 - 1 - static_cast<Float>(q.epsilon);
    const Float t0 = std::sqrt(static_cast<Float>(q.lambda_max)) - std::sqrt(Float(2));
    const Float shell = pow(t0, 2 - 2 * s) / (2 * s - 2) + pow(t0, 1 - 2 * s) / ((2 * s - 1) * std::sqrt(Float(2)));
    res.tail_bound = fabs(prefactor) * c_fit * j_total * 2 * pi * pow(fm, -s) * shell;
    return res;
}

/// Imaginary part, rho -> i rho, and class/discriminant pairs, each within
/// a relative tolerance; pairs come from rho' = rho + 2m mu, n' = n + Re(rho conj mu) + m N(mu).
template <class Float = long double>
Report adjoint_invariance_suite(const AdjointQuery& q, double tolerance = 1e-8) {
    Report report;
    const auto base = adjoint_coefficient<Float>(q);
    const Float scale = std::max(std::fabs(base.value.real()), Float(1e-300));
    auto relative = [&](Float x) { return static_cast<double>(std::fabs(x) / scale); };
    auto fmt = [](const char* label, double v) {
        std::ostringstream os;
        os.precision(3);
        os << label << " relative difference " << std::scientific << v;
        return os.str();
    };
    {
        const double d = relative(base.value.imag());
        report.checks.push_back({"imaginary-part", d < tolerance, fmt("imaginary part:", d)});
    }
    {
        AdjointQuery r = q;
        r.rho = mul_i_pow(q.rho, 1);
        const auto rot = adjoint_coefficient<Float>(r);
        const double d = relative(rot.value.real() - base.value.real());
        report.checks.push_back({"unit-rotation", d < tolerance, fmt("c(n, i rho) vs c(n, rho):", d)});
    }
    const LatticePoint mus[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}};
    for (const auto& mu : mus) {
        AdjointQuery r = q;
        r.rho = {q.rho.re + 2LL * q.m * mu.re, q.rho.im + 2LL * q.m * mu.im};
        r.n = static_cast<int>(q.n + (q.rho.re * mu.re + q.rho.im * mu.im) + static_cast<std::int64_t>(q.m) * mu.norm());
        const auto other = adjoint_coefficient<Float>(r);
        const double d = relative(other.value.real() - base.value.real());
        std::ostringstream name;
        name << "class-pair (" << r.n << ", " << r.rho << ")";
        report.checks.push_back({name.str(), d < tolerance, fmt("against the base coefficient:", d)});
    }
    return report;
}

} // namespace hjf
