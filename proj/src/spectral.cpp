#include "kacspec/spectral.hpp"

#include <stdexcept>
#include <string>

#include "kacspec/combinatorics.hpp"
#include "kacspec/error.hpp"

namespace kacspec {

namespace {

void require_order(long long n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": N must be >= 1");
}

Rational discriminant(const Rational& alpha, const Rational& beta,
                      const Rational& gamma, const Rational& delta) {
    return alpha * delta - beta * gamma;
}

void require_nondegenerate_general(const Rational& alpha, const Rational& beta,
                                   const Rational& gamma, const Rational& delta, const char* who) {
    if (discriminant(alpha, beta, gamma, delta).is_zero())
        throw std::domain_error(std::string(who) +
                                ": alpha*delta = beta*gamma (use degenerate_analysis)");
}

void require_abc_params(const Rational& a, const Rational& b, const Rational& c, const char* who) {
    if (a.is_zero() || c.is_zero())
        throw std::domain_error(std::string(who) + ": a and c must be nonzero");
    if ((b * b - Rational(4) * a * c).is_zero())
        throw std::domain_error(std::string(who) + ": D = b^2-4ac = 0 (degenerate)");
}

} // namespace

std::vector<Rational> eigenvalues_general(const Rational& alpha, const Rational& beta,
                                          const Rational& gamma, const Rational& delta, long long n) {
    require_order(n, "eigenvalues_general");
    if (alpha.is_zero() || beta.is_zero() || gamma.is_zero() || delta.is_zero())
        throw std::domain_error("eigenvalues_general: parameters must be nonzero "
                                "(zero parameters make J_N triangular; closed form not provided)");
    require_nondegenerate_general(alpha, beta, gamma, delta, "eigenvalues_general");
    Rational ad = alpha * delta, bg = beta * gamma;
    std::vector<Rational> mu;
    for (long long j = 0; j <= n; ++j) mu.push_back(ad * Rational(n - j) + bg * Rational(j));
    for (std::size_t j = 0; j + 1 < mu.size(); ++j)
        if (mu[j] == mu[j + 1]) throw internal_error("eigenvalues_general: eigenvalues not distinct");
    return mu;
}

std::vector<Rational> eigenvector_general(const Rational& alpha, const Rational& beta,
                                          const Rational& gamma, const Rational& delta,
                                          long long n, long long j) {
    require_order(n, "eigenvector_general");
    if (j < 0 || j > n) throw std::domain_error("eigenvector_general: j out of range");
    if (alpha.is_zero() || gamma.is_zero())
        throw std::domain_error("eigenvector_general: alpha and gamma must be nonzero "
                                "(triangular case; no closed-form eigenvector here)");
    require_nondegenerate_general(alpha, beta, gamma, delta, "eigenvector_general");
    Rational dg = delta / gamma, ba = beta / alpha;
    std::vector<Rational> v;
    for (long long k = 0; k <= n; ++k) {
        Rational sum(0);
        long long top = std::min(k, j);
        for (long long i = 0; i <= top; ++i) {
            Rational term(binomial(j, i) * binomial(n - j, k - i));
            sum += term * dg.pow(k - i) * ba.pow(i);
        }
        v.push_back(sum);
    }
    return v;
}

std::vector<QuadExt> eigenvalues_abc(const Rational& a, const Rational& b, const Rational& c, long long n) {
    require_order(n, "eigenvalues_abc");
    require_abc_params(a, b, c, "eigenvalues_abc");
    Rational d = b * b - Rational(4) * a * c;
    QuadExt s = QuadExt::sqrt_of(d);
    QuadExt half(Rational(1, 2));
    QuadExt plus = (QuadExt(b) + s) * half;
    QuadExt minus = (QuadExt(b) - s) * half;
    std::vector<QuadExt> lam;
    for (long long j = 0; j <= n; ++j)
        lam.push_back(QuadExt(Rational(j)) * plus + QuadExt(Rational(n - j)) * minus);
    for (std::size_t j = 0; j + 1 < lam.size(); ++j)
        if (lam[j] == lam[j + 1]) throw internal_error("eigenvalues_abc: eigenvalues not distinct");
    return lam;
}

std::vector<QuadExt> eigenvector_abc(const Rational& a, const Rational& b, const Rational& c,
                                     long long n, long long j) {
    require_order(n, "eigenvector_abc");
    if (j < 0 || j > n) throw std::domain_error("eigenvector_abc: j out of range");
    require_abc_params(a, b, c, "eigenvector_abc");
    Rational d = b * b - Rational(4) * a * c;
    QuadExt s = QuadExt::sqrt_of(d);
    QuadExt bp = QuadExt(b) + s; // b + sqrt(D)
    QuadExt bm = QuadExt(b) - s; // b - sqrt(D); bp*bm = 4ac != 0
    QuadExt base = QuadExt(Rational(2) * c) / bp;
    QuadExt ratio = bp / bm;
    std::vector<QuadExt> v;
    QuadExt base_pow(Rational(1));
    for (long long k = 0; k <= n; ++k) {
        QuadExt sum;
        QuadExt ratio_pow(Rational(1));
        long long top = std::min(k, j);
        for (long long i = 0; i <= top; ++i) {
            QuadExt term(Rational(binomial(j, i) * binomial(n - j, k - i)));
            sum += term * ratio_pow;
            ratio_pow *= ratio;
        }
        v.push_back(base_pow * sum);
        base_pow *= base;
    }
    return v;
}

DegenerateReport degenerate_analysis(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta, long long n) {
    require_order(n, "degenerate_analysis");
    if (!discriminant(alpha, beta, gamma, delta).is_zero())
        throw std::domain_error("degenerate_analysis: alpha*delta != beta*gamma (generic case)");

    DegenerateReport rep;
    Rational bd = beta * delta;
    if (bd.is_zero()) {
        // With D = 0, a nontrivial operator forces beta = delta = 0 and the
        // matrix keeps only its superdiagonal.
        if (!(beta.is_zero() && delta.is_zero()) || (alpha * gamma).is_zero())
            throw std::domain_error("degenerate_analysis: operator degenerates to the zero matrix "
                                    "(beta*delta = 0 without beta = delta = 0 and alpha*gamma != 0)");
        rep.case_tag = DegenerateCase::beta_delta_zero;
        rep.eigenvalue = QuadExt(Rational(0));
        rep.eigenvector.assign(static_cast<std::size_t>(n) + 1, QuadExt());
        rep.eigenvector[0] = QuadExt(Rational(1));
    } else {
        rep.case_tag = DegenerateCase::beta_delta_nonzero;
        Rational mu = alpha * delta * Rational(n);
        rep.eigenvalue = QuadExt(mu);
        for (long long k = 0; k <= n; ++k)
            rep.eigenvector.push_back(QuadExt(Rational(binomial(n, k)) * alpha.pow(n - k) * beta.pow(k)));
    }

    Tridiagonal j_n = build_general(alpha, beta, gamma, delta, n);
    Rational mu = rep.eigenvalue.as_rational();

    // Certify the claimed multiplicities instead of trusting the formulas.
    Polynomial expected = Polynomial({QuadExt(-mu), QuadExt(Rational(1))}).pow(static_cast<unsigned long long>(n) + 1);
    if (char_poly(j_n) != expected)
        throw internal_error("degenerate_analysis: char poly is not (x-mu)^(N+1)");
    if (!verify_eigenpair(j_n, rep.eigenvalue, rep.eigenvector, Side::right))
        throw internal_error("degenerate_analysis: eigenvector residual is nonzero");

    auto dense = shift_diag(j_n, -mu).to_dense();
    std::size_t rank = exact_rank(dense);
    rep.algebraic_multiplicity = n + 1;
    rep.geometric_multiplicity = n + 1 - static_cast<long long>(rank);
    if (rep.geometric_multiplicity != 1)
        throw internal_error("degenerate_analysis: geometric multiplicity is not 1");
    return rep;
}

std::vector<QuadExt> left_to_right(const Tridiagonal& t, const std::vector<QuadExt>& u) {
    std::size_t n = t.size();
    if (u.size() != n) throw std::domain_error("left_to_right: dimension mismatch");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (t.sub()[k].is_zero() || t.super()[k].is_zero())
            throw std::domain_error("left_to_right: off-diagonal entries must be nonzero");
    std::vector<QuadExt> v(n);
    Rational delta_k(1);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = u[k] * QuadExt(delta_k.inverse());
        if (k + 1 < n) delta_k *= t.super()[k] / t.sub()[k];
    }
    return v;
}

bool verify_eigenpair(const Tridiagonal& t, const QuadExt& lambda,
                      const std::vector<QuadExt>& v, Side side) {
    if (v.size() != t.size()) throw std::domain_error("verify_eigenpair: dimension mismatch");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) return false;
    std::vector<QuadExt> image = (side == Side::right) ? matvec(t, v) : vecmat(v, t);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!(image[k] - lambda * v[k]).is_zero()) return false;
    return true;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    // Clear denominators row by row, then run one-step Bareiss elimination.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw std::domain_error("exact_rank: ragged matrix");
        mpz_class l(1);
        for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].num() * (l / m[i][j].den());
    }
    mpz_class prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

bool proportional(const std::vector<QuadExt>& u, const std::vector<QuadExt>& v) {
    if (u.size() != v.size()) return false;
    std::size_t pivot = v.size();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) { pivot = k; break; }
    if (pivot == v.size()) return false; // v = 0
    bool u_nonzero = false;
    for (const auto& x : u) u_nonzero = u_nonzero || !x.is_zero();
    if (!u_nonzero) return false;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!(u[k] * v[pivot] - u[pivot] * v[k]).is_zero()) return false;
    return true;
}

} // namespace kacspec
