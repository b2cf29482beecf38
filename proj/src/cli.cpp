#include "kacspec/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kacspec/appendix.hpp"
#include "kacspec/combinatorics.hpp"
#include "kacspec/diffop.hpp"
#include "kacspec/error.hpp"
#include "kacspec/io.hpp"
#include "kacspec/spectral.hpp"
#include "kacspec/tridiagonal.hpp"

namespace kacspec::cli {

namespace {

struct Options {
    std::string command;
    std::string family;
    std::string preset;
    std::string format = "json";
    std::string output;
    long long n = 0;
    std::optional<long long> j;
    std::optional<std::string> a, b, c;
    std::optional<std::string> alpha, beta, gamma, delta;
    std::optional<std::string> p;
    std::uint64_t seed = 0;
};

struct AbcParams {
    Rational a, b, c;
};

struct GeneralParamSet {
    Rational alpha, beta, gamma, delta;
};

Rational opt_rational(const std::optional<std::string>& text, const char* flag) {
    if (!text) throw std::domain_error(std::string("missing required parameter ") + flag);
    return Rational::parse(*text);
}

Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 3);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!r.is_zero()) return r;
    }
}

AbcParams resolve_abc(const Options& opt, bool allow_random) {
    if (opt.preset == "sylvester-kac") return {Rational(1), Rational(0), Rational(-1)};
    if (opt.preset == "painvin") {
        Rational a = opt_rational(opt.a, "--a");
        return {a, Rational(1), Rational(1) - a};
    }
    if (opt.preset == "krawtchouk") {
        Rational p = opt_rational(opt.p, "--p");
        return {Rational(1) - p, Rational(2) * p - Rational(1), -p};
    }
    if (!opt.preset.empty()) throw std::domain_error("unknown preset " + opt.preset);
    if (allow_random && !opt.a && !opt.b && !opt.c) {
        std::mt19937_64 rng(opt.seed);
        for (;;) {
            AbcParams params{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng)};
            if (!(params.b * params.b - Rational(4) * params.a * params.c).is_zero()) return params;
        }
    }
    return {opt_rational(opt.a, "--a"), opt_rational(opt.b, "--b"), opt_rational(opt.c, "--c")};
}

GeneralParamSet resolve_general(const Options& opt, bool allow_random) {
    if (allow_random && !opt.alpha && !opt.beta && !opt.gamma && !opt.delta) {
        std::mt19937_64 rng(opt.seed);
        for (;;) {
            GeneralParamSet params{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng),
                                   random_nonzero(rng)};
            if (!(params.alpha * params.delta - params.beta * params.gamma).is_zero()) return params;
        }
    }
    return {opt_rational(opt.alpha, "--alpha"), opt_rational(opt.beta, "--beta"),
            opt_rational(opt.gamma, "--gamma"), opt_rational(opt.delta, "--delta")};
}

std::string resolved_family(const Options& opt) {
    if (!opt.preset.empty()) return "abc";
    if (opt.family.empty()) throw std::domain_error("missing --family (or --preset)");
    return opt.family;
}

void require_n(const Options& opt) {
    if (opt.n < 1) throw std::domain_error("--n must be >= 1");
}

AppendixKind appendix_kind(const std::string& family) {
    if (family == "g") return AppendixKind::G;
    if (family == "s") return AppendixKind::S;
    return AppendixKind::H;
}

void write_sink(const Options& opt, const std::string& payload) {
    if (opt.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + opt.output);
    out << payload;
    if (!out.good()) throw std::runtime_error("write failed for " + opt.output);
}

void emit_json(const Options& opt, const ordered_json& j) { write_sink(opt, j.dump(2) + "\n"); }

std::vector<QuadExt> lift(const std::vector<Rational>& v) {
    return std::vector<QuadExt>(v.begin(), v.end());
}

Polynomial roots_product(const std::vector<QuadExt>& roots) {
    Polynomial p = Polynomial::constant(QuadExt(Rational(1)));
    for (const auto& r : roots) p *= Polynomial({-r, QuadExt(Rational(1))});
    return p;
}

Tridiagonal build_for(const std::string& family, const Options& opt,
                      std::vector<std::pair<std::string, Rational>>& params_out) {
    if (family == "kac") return build_sylvester_kac(opt.n);
    if (family == "general") {
        GeneralParamSet p = resolve_general(opt, false);
        params_out = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}};
        return build_general(p.alpha, p.beta, p.gamma, p.delta, opt.n);
    }
    if (family == "abc") {
        AbcParams p = resolve_abc(opt, false);
        params_out = {{"a", p.a}, {"b", p.b}, {"c", p.c}};
        return build_abc(p.a, p.b, p.c, opt.n);
    }
    if (family == "g" || family == "s" || family == "h")
        return build_appendix_matrix(appendix_kind(family), opt.n);
    if (family == "hahn") {
        Rational alpha = opt_rational(opt.alpha, "--alpha");
        params_out = {{"alpha", alpha}};
        return build_hahn(alpha, opt.n);
    }
    throw std::domain_error("unknown family " + family);
}

int cmd_build(const Options& opt) {
    require_n(opt);
    std::vector<std::pair<std::string, Rational>> params;
    Tridiagonal t = build_for(resolved_family(opt), opt, params);
    if (opt.format == "csv") {
        write_sink(opt, matrix_csv(t));
    } else {
        emit_json(opt, matrix_json(t));
    }
    return 0;
}

SpectralReport spectrum_report(const Options& opt, bool with_pairs) {
    std::string family = resolved_family(opt);
    SpectralReport report;
    report.family = family;
    report.n = opt.n;

    // kac and the appendix families; general/abc attach pairs in their own
    // branches where the resolved parameters are in scope
    auto add_pairs = [&](const Tridiagonal& t) {
        for (std::size_t j = 0; j < report.values.size(); ++j) {
            EigenPair pair;
            pair.index = static_cast<long long>(j);
            pair.value = report.values[j];
            pair.side = Side::right;
            if (family == "kac") {
                pair.vec = lift(eigenvector_general(Rational(1), Rational(1), Rational(1), Rational(-1),
                                                    opt.n, pair.index));
            } else if (family == "h") {
                pair.vec = lift(h_right_eigenvector(opt.n, pair.index));
            } else if (family == "g") {
                pair.vec = lift(g_right_eigenvector(opt.n, pair.index));
            } else {
                continue; // s, hahn: spectra only
            }
            pair.verified = verify_eigenpair(t, pair.value, pair.vec, Side::right);
            report.pairs.push_back(std::move(pair));
        }
    };

    if (family == "kac") {
        Tridiagonal t = build_sylvester_kac(opt.n);
        for (const auto& mu : eigenvalues_general(Rational(1), Rational(1), Rational(1), Rational(-1), opt.n))
            report.values.push_back(QuadExt(mu));
        report.characteristic = char_poly(t);
        if (with_pairs) add_pairs(t);
    } else if (family == "general") {
        GeneralParamSet p = resolve_general(opt, with_pairs);
        report.params = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}};
        Tridiagonal t = build_general(p.alpha, p.beta, p.gamma, p.delta, opt.n);
        for (const auto& mu : eigenvalues_general(p.alpha, p.beta, p.gamma, p.delta, opt.n))
            report.values.push_back(QuadExt(mu));
        report.characteristic = char_poly(t);
        if (with_pairs) {
            for (long long j = 0; j <= opt.n; ++j) {
                EigenPair pair;
                pair.index = j;
                pair.value = report.values[static_cast<std::size_t>(j)];
                pair.vec = lift(eigenvector_general(p.alpha, p.beta, p.gamma, p.delta, opt.n, j));
                pair.verified = verify_eigenpair(t, pair.value, pair.vec, Side::right);
                report.pairs.push_back(std::move(pair));
            }
        }
    } else if (family == "abc") {
        AbcParams p = resolve_abc(opt, with_pairs);
        report.params = {{"a", p.a}, {"b", p.b}, {"c", p.c}};
        report.radicand = p.b * p.b - Rational(4) * p.a * p.c;
        Tridiagonal t = build_abc(p.a, p.b, p.c, opt.n);
        report.values = eigenvalues_abc(p.a, p.b, p.c, opt.n);
        report.characteristic = char_poly(t);
        if (with_pairs) {
            for (long long j = 0; j <= opt.n; ++j) {
                EigenPair pair;
                pair.index = j;
                pair.value = report.values[static_cast<std::size_t>(j)];
                pair.vec = eigenvector_abc(p.a, p.b, p.c, opt.n, j);
                pair.verified = verify_eigenpair(t, pair.value, pair.vec, Side::right);
                report.pairs.push_back(std::move(pair));
            }
        }
    } else if (family == "g" || family == "s" || family == "h") {
        AppendixKind kind = appendix_kind(family);
        Tridiagonal t = build_appendix_matrix(kind, opt.n);
        for (const auto& v : appendix_spectra(kind, opt.n)) report.values.push_back(QuadExt(v));
        report.characteristic = char_poly(t);
        if (with_pairs) add_pairs(t);
    } else if (family == "hahn") {
        Rational alpha = opt_rational(opt.alpha, "--alpha");
        report.params = {{"alpha", alpha}};
        if (!hahn_spectrum_check(alpha, opt.n))
            throw internal_error("hahn spectrum is not 0..N");
        for (long long j = 0; j <= opt.n; ++j) report.values.push_back(QuadExt(Rational(j)));
        report.characteristic = char_poly(build_hahn(alpha, opt.n));
    } else {
        throw std::domain_error("unknown family " + family);
    }
    return report;
}

int cmd_spectrum(const Options& opt) {
    require_n(opt);
    SpectralReport report = spectrum_report(opt, false);
    if (opt.format == "csv") {
        write_sink(opt, values_csv(report.values));
    } else {
        emit_json(opt, report_json(report));
    }
    return 0;
}

int cmd_eigvec(const Options& opt) {
    require_n(opt);
    if (!opt.j) throw std::domain_error("missing --j");
    long long j = *opt.j;
    std::string family = resolved_family(opt);
    std::vector<QuadExt> vec;
    std::vector<std::pair<std::string, Rational>> params;
    if (family == "kac") {
        vec = lift(eigenvector_general(Rational(1), Rational(1), Rational(1), Rational(-1), opt.n, j));
    } else if (family == "general") {
        GeneralParamSet p = resolve_general(opt, false);
        params = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}};
        vec = lift(eigenvector_general(p.alpha, p.beta, p.gamma, p.delta, opt.n, j));
    } else if (family == "abc") {
        AbcParams p = resolve_abc(opt, false);
        params = {{"a", p.a}, {"b", p.b}, {"c", p.c}};
        vec = eigenvector_abc(p.a, p.b, p.c, opt.n, j);
    } else if (family == "h" || family == "s") {
        // S = 2H shares its eigenvectors
        vec = lift(h_right_eigenvector(opt.n, j));
    } else if (family == "g") {
        vec = lift(g_right_eigenvector(opt.n, j));
    } else {
        throw std::domain_error("no closed-form eigenvectors for family " + family);
    }
    if (opt.format == "csv") {
        write_sink(opt, vector_csv(vec));
        return 0;
    }
    ordered_json out;
    out["family"] = family;
    ordered_json pj = ordered_json::object();
    for (const auto& [key, value] : params) pj[key] = value.str();
    out["params"] = std::move(pj);
    out["N"] = opt.n;
    out["j"] = j;
    ordered_json vj = ordered_json::array();
    for (const auto& x : vec) vj.push_back(quadext_json(x));
    out["vector"] = std::move(vj);
    emit_json(opt, out);
    return 0;
}

int cmd_verify(const Options& opt) {
    require_n(opt);
    if (opt.format == "csv") throw std::domain_error("verify reports are JSON only");
    std::string family = resolved_family(opt);
    SpectralReport report = spectrum_report(opt, true);

    bool all_verified = true;
    for (const auto& pair : report.pairs) all_verified = all_verified && pair.verified;

    // Closed-form eigenvalues must reassemble the characteristic polynomial.
    bool product_matches = true;
    if (report.characteristic)
        product_matches = roots_product(report.values) == *report.characteristic;

    ordered_json out = report_json(report);
    out["char_poly_match"] = product_matches;
    if (family == "g" || family == "h") {
        AppendixKind kind = appendix_kind(family);
        Tridiagonal t = build_appendix_matrix(kind, opt.n);
        bool lefts = true;
        for (long long j = 0; j <= opt.n; ++j) {
            auto u = kind == AppendixKind::H ? h_left_eigenvector(opt.n, j) : g_left_eigenvector(opt.n, j);
            lefts = lefts && verify_eigenpair(t, report.values[static_cast<std::size_t>(j)], lift(u),
                                              Side::left);
        }
        out["left_vectors_verified"] = lefts;
        all_verified = all_verified && lefts;
        out["pairing_audit"] = audit_json(pairing_audit(kind, opt.n));
        out["relation_check"] = relation_check(kind, opt.n);
        all_verified = all_verified && out["relation_check"].get<bool>();
    }
    out["all_verified"] = all_verified && product_matches;
    emit_json(opt, out);
    if (!(all_verified && product_matches))
        throw internal_error("verification failed for family " + family);
    return 0;
}

int cmd_appendix(const Options& opt) {
    require_n(opt);
    if (opt.format == "csv") throw std::domain_error("appendix reports are JSON only");
    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, long long n, bool pass) {
        ordered_json c;
        c["check"] = name;
        c["n"] = n;
        c["pass"] = pass;
        checks.push_back(std::move(c));
        all_pass = all_pass && pass;
    };

    for (long long n = 0; n <= opt.n; ++n) {
        bool omega_ok = true;
        try {
            omega_pair(n);
        } catch (const internal_error&) {
            omega_ok = false;
        }
        record("omega_division_exact", n, omega_ok);
        record("s_identity", n, s_identity_check(n));
        record("m_identity", n, m_identity_check(n));
    }
    for (long long n = 1; n <= opt.n; ++n) {
        bool spectra_ok = true;
        try {
            appendix_spectra(AppendixKind::G, n);
            appendix_spectra(AppendixKind::S, n);
            appendix_spectra(AppendixKind::H, n);
        } catch (const internal_error&) {
            spectra_ok = false;
        }
        record("integer_spectra", n, spectra_ok);
        for (const auto& alpha : {Rational(-1, 2), Rational(1, 2), Rational(1, 3), Rational(2), Rational(-2, 5)})
            record("hahn_spectrum(alpha=" + alpha.str() + ")", n, hahn_spectrum_check(alpha, n));
        record("relation_H", n, relation_check(AppendixKind::H, n));
        record("relation_G", n, relation_check(AppendixKind::G, n));
    }

    ordered_json audits = ordered_json::array();
    for (long long n = 1; n <= opt.n; ++n) {
        for (AppendixKind kind : {AppendixKind::H, AppendixKind::G}) {
            bool ok = true;
            try {
                audits.push_back(audit_json(pairing_audit(kind, n)));
            } catch (const internal_error&) {
                ok = false;
            }
            record(kind == AppendixKind::H ? "pairing_audit_H" : "pairing_audit_G", n, ok);
        }
    }

    ordered_json out;
    out["N_max"] = opt.n;
    out["checks"] = std::move(checks);
    out["audits"] = std::move(audits);
    out["all_pass"] = all_pass;
    emit_json(opt, out);
    if (!all_pass) throw internal_error("an appendix identity failed exactly");
    return 0;
}

void add_common_options(CLI::App* sub, Options& opt) {
    sub->add_option("--family", opt.family, "kac | general | abc | g | s | h | hahn");
    sub->add_option("--preset", opt.preset, "sylvester-kac | painvin | krawtchouk");
    sub->add_option("--n", opt.n, "matrix order parameter N");
    sub->add_option("--j", opt.j, "eigenvalue index");
    sub->add_option("--a", opt.a, "parameter a (exact p/q)");
    sub->add_option("--b", opt.b, "parameter b (exact p/q)");
    sub->add_option("--c", opt.c, "parameter c (exact p/q)");
    sub->add_option("--alpha", opt.alpha, "parameter alpha (exact p/q)");
    sub->add_option("--beta", opt.beta, "parameter beta (exact p/q)");
    sub->add_option("--gamma", opt.gamma, "parameter gamma (exact p/q)");
    sub->add_option("--delta", opt.delta, "parameter delta (exact p/q)");
    sub->add_option("--p", opt.p, "Krawtchouk preset parameter p (exact p/q)");
    sub->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", opt.output, "write to a file instead of stdout");
    sub->add_option("--seed", opt.seed, "seed for randomized verification");
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact spectra of Sylvester-Kac-type tridiagonal matrices"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* build = app.add_subcommand("build", "construct a matrix and emit it");
    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form eigenvalues");
    CLI::App* eigvec = app.add_subcommand("eigvec", "closed-form eigenvector for one index");
    CLI::App* verify = app.add_subcommand("verify", "verify every eigenpair exactly");
    CLI::App* appendix = app.add_subcommand("appendix", "run the full identity battery");
    for (CLI::App* sub : {build, spectrum, eigvec, verify, appendix}) add_common_options(sub, opt);

    std::vector<const char*> argv;
    argv.push_back("kacspec");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (build->parsed()) return cmd_build(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (eigvec->parsed()) return cmd_eigvec(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (appendix->parsed()) return cmd_appendix(opt);
        throw std::domain_error("no command given");
    } catch (const internal_error& e) {
        std::cerr << ordered_json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << ordered_json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}

} // namespace kacspec::cli
