// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Every comparison is exact (tolerance 0); a single mismatch fails the
// criterion and the process exit code counts the failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kacspec/appendix.hpp"
#include "kacspec/combinatorics.hpp"
#include "kacspec/diffop.hpp"
#include "kacspec/error.hpp"
#include "kacspec/io.hpp"
#include "kacspec/spectral.hpp"
#include "kacspec/tridiagonal.hpp"

using namespace kacspec;

namespace {

Rational random_nonzero(std::mt19937_64& rng, long long bound = 6, long long den = 3) {
    std::uniform_int_distribution<long long> num(-bound, bound);
    std::uniform_int_distribution<long long> d(1, den);
    for (;;) {
        Rational r(num(rng), d(rng));
        if (!r.is_zero()) return r;
    }
}

std::vector<QuadExt> lift(const std::vector<Rational>& v) {
    return std::vector<QuadExt>(v.begin(), v.end());
}

Polynomial roots_product(const std::vector<QuadExt>& roots) {
    Polynomial p = Polynomial::constant(QuadExt(Rational(1)));
    for (const auto& r : roots) p *= Polynomial({-r, QuadExt(Rational(1))});
    return p;
}

bool criterion_1_sylvester_kac_spectrum(std::ostream&) {
    for (long long n = 1; n <= 40; ++n) {
        auto mu = eigenvalues_general(Rational(1), Rational(1), Rational(1), Rational(-1), n);
        std::vector<QuadExt> roots;
        for (long long j = 0; j <= n; ++j) {
            if (mu[static_cast<std::size_t>(j)] != Rational(2 * j - n)) return false;
            roots.push_back(QuadExt(Rational(2 * j - n)));
        }
        if (roots_product(roots) != char_poly(build_sylvester_kac(n))) return false;
    }
    return true;
}

bool criterion_2_general_family(std::ostream&) {
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<long long> pick_n(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        Rational alpha, beta, gamma, delta;
        do {
            alpha = random_nonzero(rng);
            beta = random_nonzero(rng);
            gamma = random_nonzero(rng);
            delta = random_nonzero(rng);
        } while ((alpha * delta - beta * gamma).is_zero());
        long long n = pick_n(rng);
        Tridiagonal t = build_general(alpha, beta, gamma, delta, n);
        auto mu = eigenvalues_general(alpha, beta, gamma, delta, n);
        std::vector<QuadExt> roots;
        for (long long j = 0; j <= n; ++j) {
            QuadExt value(mu[static_cast<std::size_t>(j)]);
            auto v = lift(eigenvector_general(alpha, beta, gamma, delta, n, j));
            if (!verify_eigenpair(t, value, v, Side::right)) return false;
            roots.push_back(value);
        }
        if (roots_product(roots) != char_poly(t)) return false;
    }
    return true;
}

bool criterion_3_abc_nonsquare(std::ostream&) {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long long> pick_n(1, 8);
    int done = 0;
    while (done < 100) {
        Rational a = random_nonzero(rng), b = random_nonzero(rng), c = random_nonzero(rng);
        Rational d = b * b - Rational(4) * a * c;
        if (d.is_zero() || d.is_perfect_square()) continue;
        long long n = pick_n(rng);
        Tridiagonal t = build_abc(a, b, c, n);
        Polynomial cp = char_poly(t);
        auto lambda = eigenvalues_abc(a, b, c, n);
        for (long long j = 0; j <= n; ++j) {
            const QuadExt& value = lambda[static_cast<std::size_t>(j)];
            if (!cp.eval(value).is_zero()) return false;
            if (!verify_eigenpair(t, value, eigenvector_abc(a, b, c, n, j), Side::right)) return false;
        }
        ++done;
    }
    return true;
}

bool criterion_4_degenerate(std::ostream&) {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long long> pick_n(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
        Rational beta = random_nonzero(rng), gamma = random_nonzero(rng), delta = random_nonzero(rng);
        Rational alpha = beta * gamma / delta; // forces the degenerate locus
        long long n = pick_n(rng);
        Rational mu = alpha * delta * Rational(n);
        Tridiagonal t = build_general(alpha, beta, gamma, delta, n);
        Polynomial expected =
            Polynomial({QuadExt(-mu), QuadExt(Rational(1))}).pow(static_cast<unsigned long long>(n) + 1);
        if (char_poly(t) != expected) return false;
        if (exact_rank(shift_diag(t, -mu).to_dense()) != static_cast<std::size_t>(n)) return false;
        auto rep = degenerate_analysis(alpha, beta, gamma, delta, n);
        if (rep.algebraic_multiplicity != n + 1 || rep.geometric_multiplicity != 1) return false;
    }
    return true;
}

bool criterion_5_integer_spectra(std::ostream&) {
    try {
        for (long long n = 1; n <= 15; ++n) {
            auto g = appendix_spectra(AppendixKind::G, n);
            auto s = appendix_spectra(AppendixKind::S, n);
            auto h = appendix_spectra(AppendixKind::H, n);
            for (long long j = 0; j <= n; ++j) {
                if (g[static_cast<std::size_t>(j)] != Rational(2 * (2 * j - n))) return false;
                if (s[static_cast<std::size_t>(j)] != Rational(2 * (2 * j - n))) return false;
                if (h[static_cast<std::size_t>(j)] != Rational(2 * j - n)) return false;
            }
        }
    } catch (const internal_error&) {
        return false;
    }
    return true;
}

bool criterion_6_omega_identities(std::ostream&) {
    try {
        for (long long n = 0; n <= 12; ++n) {
            OmegaPair pair = omega_pair(n); // throws if the division is inexact
            if (pair.omega0 * pair.omega1 != char_poly(build_sylvester_kac(2 * n + 2))) return false;
            if (!s_identity_check(n)) return false;
            if (!m_identity_check(n)) return false;
        }
    } catch (const internal_error&) {
        return false;
    }
    return true;
}

bool criterion_7_hahn_alpha_independence(std::ostream&) {
    for (const auto& alpha :
         {Rational(-1, 2), Rational(1, 2), Rational(1, 3), Rational(2), Rational(-2, 5)}) {
        for (long long n = 1; n <= 12; ++n)
            if (!hahn_spectrum_check(alpha, n)) return false;
    }
    return true;
}

bool criterion_8_similarity_relations(std::ostream&) {
    for (long long n = 1; n <= 12; ++n) {
        if (!relation_check(AppendixKind::H, n)) return false;
        if (!relation_check(AppendixKind::G, n)) return false;
    }
    return true;
}

bool criterion_9_eigenvector_formulas(std::ostream& log) {
    try {
        for (long long n = 1; n <= 10; ++n) {
            Tridiagonal h = build_appendix_matrix(AppendixKind::H, n);
            Tridiagonal g = build_appendix_matrix(AppendixKind::G, n);
            auto hvals = appendix_spectra(AppendixKind::H, n);
            auto gvals = appendix_spectra(AppendixKind::G, n);
            for (long long j = 0; j <= n; ++j) {
                if (!verify_eigenpair(h, QuadExt(hvals[static_cast<std::size_t>(j)]),
                                      lift(h_left_eigenvector(n, j)), Side::left))
                    return false;
                if (!verify_eigenpair(g, QuadExt(gvals[static_cast<std::size_t>(j)]),
                                      lift(g_left_eigenvector(n, j)), Side::left))
                    return false;
            }
            PairingAudit ha = pairing_audit(AppendixKind::H, n);
            PairingAudit ga = pairing_audit(AppendixKind::G, n);
            log << "    audit " << audit_json(ha).dump() << "\n";
            log << "    audit " << audit_json(ga).dump() << "\n";
            if (!ha.all_verified || !ga.all_verified) return false;
        }
    } catch (const internal_error& e) {
        log << "    transcription failure: " << e.what() << "\n";
        return false;
    }
    return true;
}

bool criterion_10_operator_matrix(std::ostream&) {
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<long long> pick_n(1, 6);
    std::uniform_int_distribution<long long> coeff(-6, 6);

    // coefficient-space application agrees with the matrix, 500 instances
    for (int trial = 0; trial < 500; ++trial) {
        long long n = pick_n(rng);
        OperatorParams params{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng),
                              random_nonzero(rng), n};
        std::uniform_int_distribution<long long> deg(0, n);
        std::vector<QuadExt> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = QuadExt(Rational(coeff(rng)));
        Polynomial p(std::move(c));
        if (!operator_matrix_consistency(params, p)) return false;
    }

    // eigenpolynomial identity for all j, nondegenerate draws
    for (int trial = 0; trial < 60; ++trial) {
        long long n = pick_n(rng);
        OperatorParams params{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng),
                              random_nonzero(rng), n};
        if (params.discriminant().is_zero()) continue;
        for (long long j = 0; j <= n; ++j) {
            Polynomial w = eigenpolynomial(params, j);
            if (!(apply_operator(params, w) == QuadExt(mobius_eigen_map(params, j)) * w)) return false;
        }
    }

    // pointwise differential identity for the rational eigenfunctions
    int done = 0;
    while (done < 40) {
        Rational a = random_nonzero(rng, 4, 2), b = random_nonzero(rng, 4, 2),
                 c = random_nonzero(rng, 4, 2);
        if ((b * b - Rational(4) * a * c).is_zero()) continue;
        long long n = 1 + (done % 6);
        for (long long j = -3; j <= n + 3; ++j) {
            FactoredEigenfunction q = rational_eigenfunction(a, b, c, n, j);
            QuadExt lambda = abc_eigenvalue(a, b, c, n, j);
            int points = 0;
            for (long long step = -60; points < 20 && step <= 60; ++step) {
                QuadExt z(Rational(step, 3));
                if (q.is_pole(z)) continue;
                QuadExt quad = QuadExt(a) + QuadExt(b) * z + QuadExt(c) * z * z;
                QuadExt lhs = quad * q.derivative_eval(z) - QuadExt(c * Rational(n)) * z * q.eval(z);
                if (!(lhs == lambda * q.eval(z))) return false;
                ++points;
            }
            if (points != 20) return false;
        }
        ++done;
    }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::ostream&)> check;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Sylvester-Kac spectrum {2j-N} and char poly, N = 1..40", criterion_1_sylvester_kac_spectrum},
        {2, "four-parameter family eigenpairs, 200 random sets, N <= 12", criterion_2_general_family},
        {3, "B_N(a,b,c) eigenpairs with non-square D, 100 sets, N <= 8", criterion_3_abc_nonsquare},
        {4, "degenerate locus: (x-adN)^(N+1) char poly and rank N, 50 sets", criterion_4_degenerate},
        {5, "integer spectra of G_N, S_N, H_N, N = 1..15", criterion_5_integer_spectra},
        {6, "omega split division exact + S/M identities, N = 0..12", criterion_6_omega_identities},
        {7, "Hahn spectrum 0..N independent of alpha, N = 1..12", criterion_7_hahn_alpha_independence},
        {8, "similarity relations H^T and G^T to C_N, N = 1..12", criterion_8_similarity_relations},
        {9, "left/right eigenvector formulas verify; pairing audits bijective, N = 1..10",
         criterion_9_eigenvector_formulas},
        {10, "operator/matrix consistency, eigenpolynomials, rational eigenfunctions",
         criterion_10_operator_matrix},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = criterion.check(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << criterion.id << ". "
                  << criterion.name << " (" << std::fixed << std::setprecision(2) << seconds << "s)\n"
                  << log.str();
        if (!pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << "\n";
    return failures;
}
