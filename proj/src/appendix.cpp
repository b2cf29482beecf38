#include "kacspec/appendix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kacspec/combinatorics.hpp"
#include "kacspec/error.hpp"
#include "kacspec/spectral.hpp"

namespace kacspec {

namespace {

Tridiagonal appendix_matrix_or_trivial(AppendixKind kind, long long n) {
    if (n == 0) return Tridiagonal({}, {Rational(0)}, {});
    return build_appendix_matrix(kind, n);
}

Polynomial product_of_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(QuadExt(Rational(1)));
    for (const auto& r : roots) p *= Polynomial({QuadExt(-r), QuadExt(Rational(1))});
    return p;
}

void require_order(long long n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": N must be >= 1");
}

void require_index(long long n, long long j, const char* who) {
    require_order(n, who);
    if (j < 0 || j > n) throw std::domain_error(std::string(who) + ": j out of range 0..N");
}

// Shared Pochhammer-sum core of the four closed-form eigenvector formulas.
// offset = 0, base 1/2 for the H family; offset = 1, base 3/2 for G.
Rational eigenvector_sum(long long n, long long k, long long j, long long offset, const Rational& base) {
    Rational sum(0);
    long long top = std::min(n - k, j);
    for (long long i = 0; i <= top; ++i) {
        Rational term(binomial(n - k, i) * binomial(n - i, j - i));
        Rational num = pochhammer(Rational(n + offset - k), i + offset);
        Rational den = pochhammer(base, i);
        Rational value = term * num / den;
        if ((k + i) % 2 != 0) value = -value;
        sum += value;
    }
    return sum;
}

} // namespace

OmegaPair omega_pair(long long n) {
    if (n < 0) throw std::domain_error("omega_pair: N must be >= 0");
    OmegaPair pair;
    pair.n = n;
    pair.omega1 = char_poly(appendix_matrix_or_trivial(AppendixKind::G, n));
    Polynomial kac = char_poly(build_sylvester_kac(2 * n + 2));
    auto [quot, rem] = divide(kac, pair.omega1);
    if (!rem.is_zero())
        throw internal_error("omega_pair: char poly of K_{2N+2} is not divisible by Omega_1");
    pair.omega0 = quot;
    return pair;
}

bool s_identity_check(long long n) {
    if (n < 0) throw std::domain_error("s_identity_check: N must be >= 0");
    OmegaPair pair = omega_pair(n);
    return char_poly(build_appendix_matrix(AppendixKind::S, n + 1)) == pair.omega0;
}

bool m_identity_check(long long n) {
    if (n < 0) throw std::domain_error("m_identity_check: N must be >= 0");
    OmegaPair pair = omega_pair(n);
    Tridiagonal m = leading_principal(build_sylvester_kac(2 * n + 2), static_cast<std::size_t>(n) + 2);
    Polynomial rhs = QuadExt(Rational(1, 2)) * (pair.omega0 + Polynomial::x() * pair.omega1);
    return char_poly(m) == rhs;
}

std::vector<Rational> appendix_spectra(AppendixKind kind, long long n) {
    require_order(n, "appendix_spectra");
    std::vector<Rational> values;
    for (long long j = 0; j <= n; ++j) {
        long long base = 2 * j - n;
        values.push_back(kind == AppendixKind::H ? Rational(base) : Rational(2 * base));
    }
    if (product_of_roots(values) != char_poly(build_appendix_matrix(kind, n)))
        throw internal_error("appendix_spectra: integer spectrum does not reproduce the char poly");
    return values;
}

bool hahn_spectrum_check(const Rational& alpha, long long n) {
    require_order(n, "hahn_spectrum_check");
    std::vector<Rational> roots;
    for (long long j = 0; j <= n; ++j) roots.push_back(Rational(j));
    return char_poly(build_hahn(alpha, n)) == product_of_roots(roots);
}

bool relation_check(AppendixKind kind, long long n) {
    require_order(n, "relation_check");
    std::size_t size = static_cast<std::size_t>(n) + 1;
    switch (kind) {
    case AppendixKind::H: {
        Tridiagonal rhs_core = shift_diag(scale(build_hahn(Rational(-1, 2), n), Rational(2)), Rational(-n));
        std::vector<Rational> ones(size, Rational(1));
        return transpose(build_appendix_matrix(AppendixKind::H, n)) ==
               reversal_similarity(rhs_core, ones);
    }
    case AppendixKind::G: {
        Tridiagonal rhs_core = shift_diag(scale(build_hahn(Rational(1, 2), n), Rational(4)), Rational(-2 * n));
        // Anti-diagonal weights N+1, N, ..., 1 (row i carries N+1-i); the
        // ascending order fails the identity already at N = 2.
        std::vector<Rational> weights;
        for (long long i = 0; i <= n; ++i) weights.push_back(Rational(n + 1 - i));
        return transpose(build_appendix_matrix(AppendixKind::G, n)) ==
               reversal_similarity(rhs_core, weights);
    }
    default:
        throw std::domain_error("relation_check: only H and G have similarity relations");
    }
}

std::vector<Rational> h_left_eigenvector(long long n, long long j) {
    require_index(n, j, "h_left_eigenvector");
    std::vector<Rational> u;
    for (long long k = 0; k <= n; ++k) u.push_back(eigenvector_sum(n, k, j, 0, Rational(1, 2)));
    return u;
}

std::vector<Rational> g_left_eigenvector(long long n, long long j) {
    require_index(n, j, "g_left_eigenvector");
    std::vector<Rational> u;
    for (long long k = 0; k <= n; ++k) u.push_back(eigenvector_sum(n, k, j, 1, Rational(3, 2)));
    return u;
}

std::vector<Rational> h_right_eigenvector(long long n, long long j) {
    require_index(n, j, "h_right_eigenvector");
    std::vector<Rational> v;
    for (long long k = 0; k < n; ++k)
        v.push_back(Rational(binomial(2 * n, k)) * eigenvector_sum(n, k, j, 0, Rational(1, 2)));
    // Last entry (1/2) C(2N,N) C(N,j) with the sign (-1)^N that the
    // left-to-right conversion produces; without it the vector stops being
    // an eigenvector for odd N >= 3.
    Rational last = Rational(binomial(2 * n, n) * binomial(n, j)) * Rational(1, 2);
    v.push_back(n % 2 == 0 ? last : -last);
    return v;
}

std::vector<Rational> g_right_eigenvector(long long n, long long j) {
    require_index(n, j, "g_right_eigenvector");
    std::vector<Rational> v;
    for (long long k = 0; k <= n; ++k)
        v.push_back(Rational(binomial(2 * n + 2, k)) * eigenvector_sum(n, k, j, 1, Rational(3, 2)));
    return v;
}

PairingAudit pairing_audit(AppendixKind family, long long n) {
    require_order(n, "pairing_audit");
    if (family == AppendixKind::S)
        throw std::domain_error("pairing_audit: eigenvector formulas exist for H and G only");

    Tridiagonal t = build_appendix_matrix(family, n);
    std::vector<Rational> values = appendix_spectra(family, n);

    auto left_of = [&](long long j) {
        return family == AppendixKind::H ? h_left_eigenvector(n, j) : g_left_eigenvector(n, j);
    };
    auto right_of = [&](long long j) {
        return family == AppendixKind::H ? h_right_eigenvector(n, j) : g_right_eigenvector(n, j);
    };
    auto lift = [](const std::vector<Rational>& v) {
        return std::vector<QuadExt>(v.begin(), v.end());
    };
    auto offending = [&](long long j) {
        return std::string(family == AppendixKind::H ? "(H, " : "(G, ") + std::to_string(n) + ", " +
               std::to_string(j) + ")";
    };

    PairingAudit audit;
    audit.family = family;
    audit.n = n;

    std::vector<std::vector<QuadExt>> rights;
    for (long long j = 0; j <= n; ++j) {
        std::vector<QuadExt> v = lift(right_of(j));
        std::size_t matches = 0, match_index = 0;
        for (std::size_t jp = 0; jp < values.size(); ++jp) {
            if (verify_eigenpair(t, QuadExt(values[jp]), v, Side::right)) {
                ++matches;
                match_index = jp;
            }
        }
        if (matches != 1)
            throw internal_error("pairing_audit: right eigenvector formula " + offending(j) +
                                 (matches == 0 ? " verifies against no eigenvalue"
                                               : " verifies against several eigenvalues"));
        audit.mapping.push_back(match_index);
        rights.push_back(std::move(v));
    }

    std::vector<std::size_t> sorted = audit.mapping;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j)
        if (sorted[j] != j) throw internal_error("pairing_audit: mapping is not a bijection");

    // Ground truth: left vectors pair directly, and converting them must
    // reproduce the right-formula vector assigned to the same eigenvalue.
    for (long long j = 0; j <= n; ++j) {
        std::vector<QuadExt> u = lift(left_of(j));
        if (!verify_eigenpair(t, QuadExt(values[static_cast<std::size_t>(j)]), u, Side::left))
            throw internal_error("pairing_audit: left eigenvector formula " + offending(j) +
                                 " has a nonzero residual");
        std::vector<QuadExt> converted = left_to_right(t, u);
        std::size_t formula_index = 0;
        while (formula_index <= static_cast<std::size_t>(n) &&
               audit.mapping[formula_index] != static_cast<std::size_t>(j))
            ++formula_index;
        if (!proportional(converted, rights[formula_index]))
            throw internal_error("pairing_audit: left_to_right of " + offending(j) +
                                 " is not proportional to the right-formula vector");
    }

    audit.all_verified = true;
    return audit;
}

} // namespace kacspec
