// hjf: construct Hermitian Jacobi forms, apply operators, run checks.
//
// Exit status: 0 success (every requested check passed), 1 a check failed,
// 2 usage error, 3 insufficient truncation, 4 invariant violation in an
// input, 5 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hjf/hjf.hpp"

using namespace hjf;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, truncation = 3, invariant = 4, io = 5 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string recipe, name, suite = "all";
    std::string form, other, left, right, out, format = "json", side = "upper", f_key = "Delta";
    std::vector<std::string> xi;
    int k = 4, nmax = 12, numax = 3, l = 2, shift = 1, index = 1, m = 1, n = 1, nu = 2;
    std::string rho = "0,0";
    double lambda_max = 100;
    bool invariance = false;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text(const Options& o, const std::string& text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out);
    if (!out) throw IoError("cannot write " + o.out);
    out << text;
}

void emit(const Options& o, const Json& doc) {
    write_text(o, (o.format == "csv") ? to_csv(doc) : doc.dump(2) + "\n");
}

LatticePoint parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected a,b for a Gaussian integer, got '" + s + "'");
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

std::optional<QSeries<Rational>> builtin_modular(const std::string& key, int n_max) {
    if (key == "E4") return eisenstein(4, n_max);
    if (key == "E6") return eisenstein(6, n_max);
    if (key == "Delta") return delta(n_max);
    return std::nullopt;
}

ClassicalJacobiForm load_classical(const std::string& key, int n_max) {
    if (key == "E4,1") return jacobi_eisenstein(4, n_max);
    if (key == "E6,1") return jacobi_eisenstein(6, n_max);
    return classical_from_document(read_json(key));
}

QSeries<Rational> load_qseries(const std::string& key, int n_max) {
    if (auto f = builtin_modular(key, n_max)) return *f;
    return qseries_from_document(read_json(key));
}

HermitianJacobiForm load_hermitian(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("--form is required");
    return hermitian_from_document(read_json(path));
}

Json with_validation(const HermitianJacobiForm& phi, bool& passed) {
    Json doc = to_document(phi);
    const Report r = validate(phi);
    passed = r.passed();
    doc["validation"] = to_json(r);
    return doc;
}

int run_construct(const Options& o) {
    const std::string& r = o.recipe;
    if (r == "jacobi-eisenstein") {
        const auto phi = jacobi_eisenstein(o.k, o.nmax);
        Json doc = to_document(phi);
        const Report rep = classical_invariant_check(phi);
        doc["validation"] = to_json(rep);
        emit(o, doc);
        return rep.passed() ? ok : check_failed;
    }
    HermitianJacobiForm phi(0, 1, 0);
    if (r == "hmap") {
        phi = hmap(load_classical(o.left, o.nmax), load_classical(o.right, o.nmax));
    } else if (r == "unit-average") {
        phi = unit_average(load_hermitian(o.form));
    } else if (r == "u-rho") {
        phi = u_rho(load_hermitian(o.form), parse_point(o.rho));
    } else if (r == "v-l") {
        phi = v_l(load_hermitian(o.form), o.l);
    } else if (r == "diff1") {
        phi = diff_construct_1(load_hermitian(o.form), load_hermitian(o.other));
    } else if (r == "diff2") {
        phi = diff_construct_2(load_hermitian(o.form), load_hermitian(o.other));
    } else if (r == "theta-reconstruct") {
        const auto dec = theta_from_document(read_json(o.form));
        phi = theta_reconstruct(dec, dec.weight, std::min(o.nmax, dec.n_max));
    } else {
        throw CLI::ValidationError("construct", "unknown recipe '" + r + "'");
    }
    bool passed = false;
    emit(o, with_validation(phi, passed));
    return passed ? ok : check_failed;
}

Json heat_document(const HeatImage& img) {
    Json doc = to_document(img.series, img.normalization);
    doc["congruence_zero"] = img.congruence_zero;
    return doc;
}

int run_op(const Options& o) {
    const std::string& name = o.name;
    if (name == "tl") {
        const auto f = load_qseries(o.form, o.nmax);
        emit(o, to_document(hecke_tl(f, o.l, f.weight())));
        return ok;
    }
    if (name == "invert") {
        if (o.xi.empty()) throw std::invalid_argument("invert needs --xi files for nu = 0..numax");
        std::vector<QSeries<Rational>> xi;
        for (const auto& p : o.xi) xi.push_back(qseries_from_document(read_json(p)));
        const int nu = static_cast<int>(xi.size()) - 1;
        emit(o, to_document(invert_chain(xi, xi[0].weight(), o.index, nu)));
        return ok;
    }
    const HermitianJacobiForm phi = load_hermitian(o.form);
    if (name == "dnu") {
        emit(o, heat_document(dnu_closed(phi, o.numax)));
    } else if (name == "dnu-chain") {
        emit(o, heat_document(dnu_chain(phi, o.numax)));
    } else if (name == "vl") {
        emit(o, to_document(v_l(phi, o.l)));
    } else if (name == "urho") {
        emit(o, to_document(u_rho(phi, parse_point(o.rho))));
    } else if (name == "restrict") {
        emit(o, to_document(restrict_diagonal(phi)));
    } else if (name == "moments") {
        emit(o, to_document(diagonal_moments(phi, o.numax)));
    } else if (name == "theta") {
        emit(o, to_document(theta_decompose(phi)));
    } else if (name == "offdiag") {
        if (o.side != "upper" && o.side != "lower") throw std::invalid_argument("--side must be upper or lower");
        const auto img = dnu_offdiagonal(phi, o.numax, o.shift, o.side == "upper" ? Side::upper : Side::lower);
        Json doc = to_document(img.series, img.normalization);
        doc["congruence_zero"] = img.congruence_zero;
        emit(o, doc);
    } else {
        throw CLI::ValidationError("op", "unknown operation '" + name + "'");
    }
    return ok;
}

Report modularity_suite(const HermitianJacobiForm& phi, int nu_max) {
    Report rep;
    const DiagonalMoments s = diagonal_moments(phi, nu_max);
    for (int nu = 0; nu <= nu_max; ++nu) {
        const HeatImage img = dnu_closed(s, nu);
        const int w = phi.weight() + 2 * nu;
        std::ostringstream name;
        name << "D_" << nu << " in " << (nu == 0 ? "M_" : "S_") << w;
        if (img.congruence_zero) {
            rep.checks.push_back({name.str() + " (vanishes: weight not divisible by 4)", img.series.is_zero(),
                                  img.series.is_zero() ? "" : "nonzero heat image"});
            continue;
        }
        const auto cert = certify_membership(img.series, w, nu > 0);
        rep.checks.push_back({name.str(), cert.certified, cert.reason});
    }
    return rep;
}

Report theta_suite(const HermitianJacobiForm& phi) {
    Report rep;
    try {
        const auto dec = theta_decompose(phi);
        const bool same = theta_reconstruct(dec, phi.weight(), phi.n_max()) == phi;
        const bool back = theta_decompose(theta_reconstruct(dec, phi.weight(), phi.n_max())) == dec;
        rep.checks.push_back({"reconstruct(decompose)", same, same ? "" : "reconstruction differs"});
        rep.checks.push_back({"decompose(reconstruct)", back, back ? "" : "decomposition differs"});
    } catch (const ClassLawViolation& e) {
        rep.checks.push_back({"class-law", false, e.what()});
    }
    return rep;
}

Report determination_suite(const HermitianJacobiForm& phi, bool strict) {
    Report rep;
    const std::int64_t kap = kappa(phi.weight(), phi.index());
    if (phi.n_max() < kap) {
        if (strict) throw InsufficientTruncation("determination: n_max = " + std::to_string(phi.n_max()) +
                                                 " < kappa = " + std::to_string(kap));
        rep.checks.push_back({"determination (vacuous: n_max < kappa)", true, ""});
        return rep;
    }
    const bool low_vanish = determination_check(phi);
    const bool ok_ = !low_vanish || phi.is_zero();
    rep.checks.push_back({low_vanish ? "determination (hypothesis met)" : "determination (vacuous: low coefficients nonzero)",
                          ok_, ok_ ? "" : "coefficients with n <= kappa vanish but the form does not"});
    return rep;
}

int run_verify(const Options& o) {
    static const std::vector<std::string> suites = {"invariants", "modularity", "commutation", "theta-roundtrip",
                                                    "spez", "determination", "all"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
        throw CLI::ValidationError("verify", "unknown suite '" + o.suite + "'");
    const Json doc = read_json(o.form);
    const std::string kind = document_kind(doc);
    Json out;
    out["suite"] = o.suite;
    bool gating_pass = true;
    auto add = [&](const std::string& label, const Report& rep, bool gating) {
        Json j = to_json(rep);
        j["gating"] = gating;
        out["results"][label] = j;
        if (gating && !rep.passed()) gating_pass = false;
    };
    const bool all = o.suite == "all";
    if (kind == "classical-jacobi") {
        if (o.suite != "invariants" && !all)
            throw std::invalid_argument("suite '" + o.suite + "' needs a hermitian-jacobi document");
        add("invariants", classical_invariant_check(classical_from_document(doc)), true);
    } else if (kind == "qseries") {
        if (o.suite != "modularity" && !all)
            throw std::invalid_argument("suite '" + o.suite + "' needs a hermitian-jacobi document");
        const auto f = qseries_from_document(doc);
        const auto cert = certify_membership(f, f.weight(), false);
        Report rep;
        rep.checks.push_back({"M_" + std::to_string(f.weight()), cert.certified, cert.reason});
        add("modularity", rep, true);
    } else {
        const HermitianJacobiForm phi = hermitian_from_document(doc);
        if (all || o.suite == "invariants") add("invariants", validate(phi), true);
        if (all || o.suite == "modularity") add("modularity", modularity_suite(phi, o.numax), true);
        if (all || o.suite == "commutation") {
            Report rep;
            for (int l = 1; l <= 3; ++l) {
                if (phi.n_max() < l) {
                    if (!all) throw InsufficientTruncation("commutation: n_max < l = " + std::to_string(l));
                    continue;
                }
                rep.append(commutation_check(phi, l, o.numax));
            }
            add("commutation", rep, true);
        }
        if (all || o.suite == "theta-roundtrip") add("theta-roundtrip", theta_suite(phi), true);
        if (all || o.suite == "spez") {
            const auto sp = is_spezialschar(phi);
            Report rep;
            rep.checks.push_back({"spezialschar", sp.value, sp.witness});
            add("spez", rep, !all);
        }
        if (all || o.suite == "determination") add("determination", determination_suite(phi, !all), true);
    }
    out["passed"] = gating_pass;
    emit(o, out);
    return gating_pass ? ok : check_failed;
}

int run_bounds(const Options& o) {
    const std::int64_t kap = kappa(o.k, o.m);
    const std::int64_t l = 4LL * o.m * kap;
    const std::int64_t r = big_r(o.m, l);
    if (o.format == "csv") {
        std::ostringstream os;
        os << "k,m,kappa,l,R\n" << o.k << ',' << o.m << ',' << kap << ',' << l << ',' << r << '\n';
        write_text(o, os.str());
        return ok;
    }
    Json doc;
    doc["k"] = o.k;
    doc["m"] = o.m;
    doc["kappa"] = kap;
    doc["l"] = l;
    doc["R"] = r;
    write_text(o, doc.dump(2) + "\n");
    return ok;
}

int run_adjoint(const Options& o) {
    AdjointQuery q;
    q.k = o.k;
    q.nu = o.nu;
    q.m = o.m;
    q.n = o.n;
    q.rho = parse_point(o.rho);
    q.lambda_max = o.lambda_max;
    const bool builtin = builtin_modular(o.f_key, 1).has_value();
    q.f = load_qseries(o.f_key, 64);
    AdjointResult<long double> res;
    for (;;) {
        try {
            res = adjoint_coefficient(q);
            break;
        } catch (const InsufficientCuspFormTruncation& e) {
            if (!builtin) throw;
            q.f = *builtin_modular(o.f_key, static_cast<int>(e.required()));
        }
    }
    Json doc;
    doc["k"] = q.k;
    doc["nu"] = q.nu;
    doc["m"] = q.m;
    doc["n"] = q.n;
    doc["rho"] = {q.rho.re, q.rho.im};
    doc["lambda_max"] = q.lambda_max;
    doc["lattice_points"] = res.lattice_points;
    doc["max_T"] = res.max_t;
    doc["value_re"] = static_cast<double>(res.value.real());
    doc["value_im"] = static_cast<double>(res.value.imag());
    doc["prefactor"] = static_cast<double>(res.prefactor);
    doc["tail_bound"] = static_cast<double>(res.tail_bound);
    doc["coefficient_bound"] = static_cast<double>(res.coefficient_bound);
    doc["assembled_value"] = static_cast<double>(res.assembled);
    doc["path_ratio"] = static_cast<double>(res.path_ratio);
    doc["paths_agree"] = res.paths_agree;
    doc["tolerance"] = 1e-8;
    bool passed = true;
    if (o.invariance) {
        const Report rep = adjoint_invariance_suite<long double>(q, 1e-8);
        doc["invariance"] = to_json(rep);
        passed = rep.passed();
    }
    write_text(o, doc.dump(2) + "\n");
    return passed ? ok : check_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian Jacobi forms over Z[i]: construction, heat and Hecke operators, checks"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "build a form and validate it");
    construct->add_option("recipe", o.recipe,
                          "jacobi-eisenstein | hmap | unit-average | u-rho | v-l | diff1 | diff2 | theta-reconstruct")
        ->required();
    construct->add_option("--k", o.k, "weight for jacobi-eisenstein (4 or 6)");
    construct->add_option("--left", o.left, "classical input: E4,1 | E6,1 | file")->default_val("E4,1");
    construct->add_option("--right", o.right, "classical input: E4,1 | E6,1 | file")->default_val("E4,1");
    construct->add_option("--form", o.form, "hermitian (or theta) input document");
    construct->add_option("--other", o.other, "second hermitian input for diff1/diff2");
    construct->add_option("--l", o.l, "V_l parameter");
    construct->add_option("--rho", o.rho, "U_rho parameter a,b");

    auto* op = app.add_subcommand("op", "apply one operator");
    op->add_option("name", o.name, "dnu | dnu-chain | vl | tl | urho | restrict | moments | invert | theta | offdiag")
        ->required();
    op->add_option("--form", o.form, "input document (or E4 | E6 | Delta for tl)");
    op->add_option("--xi", o.xi, "heat images D_0..D_nu for invert");
    op->add_option("--index", o.index, "index m for invert");
    op->add_option("--l", o.l, "Hecke parameter");
    op->add_option("--rho", o.rho, "U_rho parameter a,b");
    op->add_option("--shift", o.shift, "off-diagonal shift d");
    op->add_option("--side", o.side, "off-diagonal side: upper | lower");

    auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff it passes");
    verify->add_option("--form", o.form, "input document")->required();
    verify->add_option("--suite", o.suite,
                       "invariants | modularity | commutation | theta-roundtrip | spez | determination | all");

    auto* bounds = app.add_subcommand("bounds", "kappa(k, m) and R(4m kappa)");
    bounds->add_option("--k", o.k)->required();
    bounds->add_option("--m", o.m)->required();

    auto* adjoint = app.add_subcommand("adjoint", "evaluate a Fourier coefficient of the adjoint map");
    adjoint->add_option("--k", o.k)->default_val(8);
    adjoint->add_option("--nu", o.nu)->default_val(2);
    adjoint->add_option("--m", o.m)->default_val(1);
    adjoint->add_option("--n", o.n)->default_val(1);
    adjoint->add_option("--rho", o.rho, "target index a,b");
    adjoint->add_option("--f", o.f_key, "cusp form: Delta | qseries file");
    adjoint->add_option("--lambda-max", o.lambda_max, "lattice cutoff");
    adjoint->add_flag("--invariance", o.invariance, "also run the invariance suite");

    for (auto* sub : {construct, op, verify, bounds, adjoint}) {
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    }
    for (auto* sub : {construct, op, verify}) sub->add_option("--nmax", o.nmax, "truncation");
    for (auto* sub : {op, verify}) sub->add_option("--numax", o.numax, "largest nu");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    try {
        if (construct->parsed()) return run_construct(o);
        if (op->parsed()) return run_op(o);
        if (verify->parsed()) return run_verify(o);
        if (bounds->parsed()) return run_bounds(o);
        if (adjoint->parsed()) return run_adjoint(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const InsufficientTruncation& e) {
        std::cerr << "insufficient truncation: " << e.what() << "\n";
        return truncation;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return invariant;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return io;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
