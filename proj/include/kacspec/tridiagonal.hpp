#ifndef KACSPEC_TRIDIAGONAL_HPP
#define KACSPEC_TRIDIAGONAL_HPP

#include <cstddef>
#include <vector>

#include "kacspec/polynomial.hpp"
#include "kacspec/quadext.hpp"
#include "kacspec/rational.hpp"

namespace kacspec {

/**
 * Exact tridiagonal matrix, stored as its three diagonals:
 *   sub[k]   = entry (k+1, k)
 *   main[k]  = entry (k, k)
 *   super[k] = entry (k, k+1)
 * Everything off these diagonals is zero. Matrices are immutable after
 * construction.
 */
class Tridiagonal {
public:
    Tridiagonal(std::vector<Rational> sub, std::vector<Rational> main, std::vector<Rational> super);

    std::size_t size() const { return main_.size(); }
    const std::vector<Rational>& sub() const { return sub_; }
    const std::vector<Rational>& main_diag() const { return main_; }
    const std::vector<Rational>& super() const { return super_; }

    /// Entry (i, j); zero off the three diagonals.
    Rational entry(std::size_t i, std::size_t j) const;

    std::vector<std::vector<Rational>> to_dense() const;

    friend bool operator==(const Tridiagonal& a, const Tridiagonal& b) {
        return a.sub_ == b.sub_ && a.main_ == b.main_ && a.super_ == b.super_;
    }

private:
    std::vector<Rational> sub_, main_, super_;
};

/// J_N of the four-parameter family: (N+1)x(N+1) with super_k = (k+1)αγ,
/// main_k = k(αδ+βγ), sub_k = -(N-k)βδ.
Tridiagonal build_general(const Rational& alpha, const Rational& beta,
                          const Rational& gamma, const Rational& delta, long long n);

/// The classic (N+1)x(N+1) matrix: zero diagonal, super 1..N, sub N..1.
/// Coincides with build_general(1, 1, 1, -1, N).
Tridiagonal build_sylvester_kac(long long n);

/// B_N(a,b,c): super_k = (k+1)a, main_k = k*b, sub_k = -(N-k)c.
Tridiagonal build_abc(const Rational& a, const Rational& b, const Rational& c, long long n);

enum class AppendixKind { G, S, H };

/// G_N, S_N and H_N = S_N/2:
///   G: super 1..N,       sub 2N+2, 2N+1, ..., N+3, zero diagonal
///   S: super 1..N-1, 2N, sub 2N, ..., N+1,          zero diagonal
Tridiagonal build_appendix_matrix(AppendixKind kind, long long n);

/// Hahn recurrence matrix C_N(α) with equal parameters: main_i = N/2,
/// super_0 = N/2, super_i = (i+2α+1)(N-i)/(2(2i+2α+1)) for i = 1..N-1,
/// sub entry (i+1, i) = (i+1)(i+1+2α+N+1)/(2(2(i+1)+2α+1)).
Tridiagonal build_hahn(const Rational& alpha, long long n);

/// Exact product T v.
std::vector<QuadExt> matvec(const Tridiagonal& t, const std::vector<QuadExt>& v);

/// Exact left product u T (u a row vector).
std::vector<QuadExt> vecmat(const std::vector<QuadExt>& u, const Tridiagonal& t);

/// Monic characteristic polynomial det(xI - T) via the three-term
/// recurrence p_{k+1} = (x - main_k) p_k - super_{k-1} sub_{k-1} p_{k-1}.
Polynomial char_poly(const Tridiagonal& t);

/// D T D^{-1} with D = diag(d); all weights nonzero.
Tridiagonal diag_similarity(const Tridiagonal& t, const std::vector<Rational>& d);

/// P T P^{-1} where P has P_{i, n-1-i} = w_i and zeros elsewhere (weighted
/// anti-diagonal permutation). The result is tridiagonal again.
Tridiagonal reversal_similarity(const Tridiagonal& t, const std::vector<Rational>& w);

/// True iff entry (i,j) == entry (n-1-j, n-1-i) for all i, j.
bool is_persymmetric(const Tridiagonal& t);

Tridiagonal transpose(const Tridiagonal& t);

/// s * T
Tridiagonal scale(const Tridiagonal& t, const Rational& s);

/// T + s*I
Tridiagonal shift_diag(const Tridiagonal& t, const Rational& s);

/// Leading principal m x m submatrix (all three diagonals truncated).
Tridiagonal leading_principal(const Tridiagonal& t, std::size_t m);

} // namespace kacspec

#endif // KACSPEC_TRIDIAGONAL_HPP
