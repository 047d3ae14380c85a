#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hjf/arith.hpp"
#include "hjf/classical.hpp"
#include "hjf/errors.hpp"
#include "hjf/heat.hpp"
#include "hjf/hermitian.hpp"
#include "hjf/qseries.hpp"
#include "hjf/report.hpp"
#include "hjf/theta.hpp"

namespace hjf {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "hjf-form/1";

namespace detail {

inline Json envelope(const char* kind, int weight, int index, int n_max, bool unit_invariant,
                     const std::string& normalization) {
    Json doc;
    doc["format"] = kFormat;
    doc["kind"] = kind;
    doc["weight"] = weight;
    doc["index"] = index;
    doc["n_max"] = n_max;
    doc["unit_invariant"] = unit_invariant;
    doc["normalization"] = normalization;
    doc["coefficients"] = Json::array();
    return doc;
}

inline void put_value(Json& rec, const GaussianRational& v) {
    rec["re"] = to_string(v.re);
    rec["im"] = to_string(v.im);
}

inline GaussianRational get_value(const Json& rec) {
    Rational re = parse_rational(rec.at("re").get<std::string>());
    Rational im = rec.contains("im") ? parse_rational(rec.at("im").get<std::string>()) : Rational(0);
    return {re, im};
}

inline void expect_kind(const Json& doc, const char* kind) {
    if (!doc.is_object() || doc.value("format", std::string()) != kFormat)
        throw std::invalid_argument(std::string("document is not in format ") + kFormat);
    const std::string k = doc.value("kind", std::string());
    if (k != kind) throw std::invalid_argument("expected a " + std::string(kind) + " document, got '" + k + "'");
}

inline std::int64_t get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing or non-integer field '") + key + "'");
    return j.at(key).get<std::int64_t>();
}

} // namespace detail

inline std::string document_kind(const Json& doc) {
    if (!doc.is_object() || doc.value("format", std::string()) != kFormat)
        throw std::invalid_argument(std::string("document is not in format ") + kFormat);
    return doc.value("kind", std::string());
}

inline Json to_document(const QSeries<GaussianRational>& f, const std::string& normalization = "") {
    Json doc = detail::envelope("qseries", f.weight(), 0, f.n_max(), false, normalization);
    for (int n = 0; n <= f.n_max(); ++n) {
        if (f[n].is_zero()) continue;
        Json rec;
        rec["n"] = n;
        detail::put_value(rec, f[n]);
        doc["coefficients"].push_back(rec);
    }
    return doc;
}

inline Json to_document(const QSeries<Rational>& f, const std::string& normalization = "") {
    return to_document(to_gaussian(f), normalization);
}

inline Json to_document(const ClassicalJacobiForm& phi) {
    Json doc = detail::envelope("classical-jacobi", phi.weight(), phi.index(), phi.n_max(), false, "");
    phi.for_each([&](int n, std::int64_t r, const Rational& c) {
        if (is_zero(c)) return;
        Json rec;
        rec["n"] = n;
        rec["r"] = r;
        detail::put_value(rec, GaussianRational(c));
        doc["coefficients"].push_back(rec);
    });
    return doc;
}

inline Json to_document(const HermitianJacobiForm& phi) {
    Json doc = detail::envelope("hermitian-jacobi", phi.weight(), phi.index(), phi.n_max(), phi.unit_invariant(),
                                phi.normalization());
    phi.for_each_nonzero([&](int n, const LatticePoint& rho, const GaussianRational& c) {
        Json rec;
        rec["n"] = n;
        rec["rho"] = {rho.re, rho.im};
        detail::put_value(rec, c);
        doc["coefficients"].push_back(rec);
    });
    return doc;
}

inline Json to_document(const ThetaDecomposition& dec) {
    Json doc = detail::envelope("theta-decomposition", dec.weight, dec.index, dec.n_max, dec.unit_invariant, "");
    for (std::size_t i = 0; i < dec.classes.size(); ++i)
        for (const auto& [l, v] : dec.components[i]) {
            if (v.is_zero()) continue;
            Json rec;
            rec["class"] = {dec.classes[i].re, dec.classes[i].im};
            rec["L"] = l;
            detail::put_value(rec, v);
            doc["coefficients"].push_back(rec);
        }
    return doc;
}

inline Json to_document(const DiagonalMoments& s) {
    Json doc = detail::envelope("diagonal-moments", s.weight, s.index, s.n_max, false, "");
    doc["j_max"] = s.j_max();
    for (int j = 0; j <= s.j_max(); ++j)
        for (int n = 0; n <= s.n_max; ++n) {
            if (s.at(j, n).is_zero()) continue;
            Json rec;
            rec["j"] = j;
            rec["n"] = n;
            detail::put_value(rec, s.at(j, n));
            doc["coefficients"].push_back(rec);
        }
    return doc;
}

inline QSeries<GaussianRational> gaussian_qseries_from_document(const Json& doc) {
    detail::expect_kind(doc, "qseries");
    QSeries<GaussianRational> f(static_cast<int>(detail::get_int(doc, "weight")),
                                static_cast<int>(detail::get_int(doc, "n_max")));
    for (const auto& rec : doc.at("coefficients")) {
        const auto n = detail::get_int(rec, "n");
        if (n < 0 || n > f.n_max()) throw std::invalid_argument("qseries record index out of range");
        f[static_cast<int>(n)] = detail::get_value(rec);
    }
    return f;
}

inline QSeries<Rational> qseries_from_document(const Json& doc) {
    const auto g = gaussian_qseries_from_document(doc);
    QSeries<Rational> f(g.weight(), g.n_max());
    for (int n = 0; n <= g.n_max(); ++n) {
        if (!g[n].is_real()) throw std::invalid_argument("qseries has a non-rational coefficient at n = " + std::to_string(n));
        f[n] = g[n].re;
    }
    return f;
}

inline ClassicalJacobiForm classical_from_document(const Json& doc) {
    detail::expect_kind(doc, "classical-jacobi");
    ClassicalJacobiForm phi(static_cast<int>(detail::get_int(doc, "weight")),
                            static_cast<int>(detail::get_int(doc, "index")),
                            static_cast<int>(detail::get_int(doc, "n_max")));
    for (const auto& rec : doc.at("coefficients")) {
        const GaussianRational v = detail::get_value(rec);
        if (!v.is_real()) throw std::invalid_argument("classical Jacobi coefficient with nonzero imaginary part");
        const auto n = static_cast<int>(detail::get_int(rec, "n"));
        const auto r = detail::get_int(rec, "r");
        if (!phi.in_support(n, r)) throw InvariantViolation("classical record (" + std::to_string(n) + ", " +
                                                            std::to_string(r) + ") outside r^2 <= 4nm");
        phi.set(n, r, v.re);
    }
    return phi;
}

inline HermitianJacobiForm hermitian_from_document(const Json& doc) {
    detail::expect_kind(doc, "hermitian-jacobi");
    HermitianJacobiForm phi(static_cast<int>(detail::get_int(doc, "weight")),
                            static_cast<int>(detail::get_int(doc, "index")),
                            static_cast<int>(detail::get_int(doc, "n_max")), doc.value("unit_invariant", true));
    phi.set_normalization(doc.value("normalization", std::string()));
    for (const auto& rec : doc.at("coefficients")) {
        const auto n = static_cast<int>(detail::get_int(rec, "n"));
        const Json& r = rec.at("rho");
        if (!r.is_array() || r.size() != 2) throw std::invalid_argument("rho must be [re, im]");
        const LatticePoint rho{r[0].get<std::int64_t>(), r[1].get<std::int64_t>()};
        if (!phi.in_support(n, rho)) {
            std::ostringstream os;
            os << "record (" << n << ", " << rho << ") outside N(rho) <= 4nm";
            throw InvariantViolation(os.str());
        }
        phi.set(n, rho, detail::get_value(rec));
    }
    return phi;
}

inline ThetaDecomposition theta_from_document(const Json& doc) {
    detail::expect_kind(doc, "theta-decomposition");
    ThetaDecomposition dec = ThetaDecomposition::zero(static_cast<int>(detail::get_int(doc, "weight")),
                                                      static_cast<int>(detail::get_int(doc, "index")),
                                                      static_cast<int>(detail::get_int(doc, "n_max")),
                                                      doc.value("unit_invariant", true));
    for (const auto& rec : doc.at("coefficients")) {
        const Json& s = rec.at("class");
        if (!s.is_array() || s.size() != 2) throw std::invalid_argument("class must be [p, q]");
        dec.set({s[0].get<std::int64_t>(), s[1].get<std::int64_t>()}, detail::get_int(rec, "L"),
                detail::get_value(rec));
    }
    return dec;
}

inline Json to_json(const Report& report) {
    Json out;
    out["passed"] = report.passed();
    out["checks"] = Json::array();
    for (const auto& c : report.checks) {
        Json rec;
        rec["name"] = c.name;
        rec["passed"] = c.passed;
        if (!c.witness.empty()) rec["witness"] = c.witness;
        out["checks"].push_back(rec);
    }
    return out;
}

/// One row per stored coefficient: n, rho_re, rho_im, coeff_re, coeff_im.
/// q-series rows use rho = 0; classical rows put r in rho_re;
/// theta rows put L in n and the class in rho; moment rows put j in rho_re.
inline std::string to_csv(const Json& doc) {
    const std::string kind = document_kind(doc);
    std::ostringstream os;
    os << "n,rho_re,rho_im,coeff_re,coeff_im\n";
    for (const auto& rec : doc.at("coefficients")) {
        std::int64_t n = 0, a = 0, b = 0;
        if (kind == "qseries") {
            n = rec.at("n").get<std::int64_t>();
        } else if (kind == "classical-jacobi") {
            n = rec.at("n").get<std::int64_t>();
            a = rec.at("r").get<std::int64_t>();
        } else if (kind == "hermitian-jacobi") {
            n = rec.at("n").get<std::int64_t>();
            a = rec.at("rho")[0].get<std::int64_t>();
            b = rec.at("rho")[1].get<std::int64_t>();
        } else if (kind == "theta-decomposition") {
            n = rec.at("L").get<std::int64_t>();
            a = rec.at("class")[0].get<std::int64_t>();
            b = rec.at("class")[1].get<std::int64_t>();
        } else if (kind == "diagonal-moments") {
            n = rec.at("n").get<std::int64_t>();
            a = rec.at("j").get<std::int64_t>();
        } else {
            throw std::invalid_argument("no CSV layout for kind '" + kind + "'");
        }
        os << n << ',' << a << ',' << b << ',' << rec.at("re").get<std::string>() << ','
           << rec.value("im", std::string("0")) << '\n';
    }
    return os.str();
}

} // namespace hjf
