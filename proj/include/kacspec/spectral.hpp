#ifndef KACSPEC_SPECTRAL_HPP
#define KACSPEC_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "kacspec/quadext.hpp"
#include "kacspec/rational.hpp"
#include "kacspec/tridiagonal.hpp"

namespace kacspec {

enum class Side { left, right };

/// One eigenvalue with its eigenvector, as produced by the closed forms.
/// verified is set only after an exact residual check.
struct EigenPair {
    long long index = 0;
    QuadExt value;
    std::vector<QuadExt> vec;
    Side side = Side::right;
    bool verified = false;
};

enum class DegenerateCase { beta_delta_zero, beta_delta_nonzero };

/// Spectral data of J_N on the degenerate locus αδ = βγ: a single
/// eigenvalue of algebraic multiplicity N+1 and geometric multiplicity 1.
struct DegenerateReport {
    QuadExt eigenvalue;
    long long algebraic_multiplicity = 0;
    long long geometric_multiplicity = 0;
    std::vector<QuadExt> eigenvector;
    DegenerateCase case_tag = DegenerateCase::beta_delta_nonzero;
};

/// μ_j = αδ(N-j) + βγ j, j = 0..N. Requires all four parameters nonzero
/// and αδ != βγ (otherwise use degenerate_analysis).
std::vector<Rational> eigenvalues_general(const Rational& alpha, const Rational& beta,
                                          const Rational& gamma, const Rational& delta, long long n);

/// v_{kj} = sum_{i=0}^{min(k,j)} C(j,i) C(N-j,k-i) (δ/γ)^{k-i} (β/α)^i.
std::vector<Rational> eigenvector_general(const Rational& alpha, const Rational& beta,
                                          const Rational& gamma, const Rational& delta,
                                          long long n, long long j);

/// λ_j = j (b+sqrt(D))/2 + (N-j)(b-sqrt(D))/2 with D = b^2 - 4ac; values
/// live in Q(sqrt(D)) and collapse to rationals when D is a perfect square.
std::vector<QuadExt> eigenvalues_abc(const Rational& a, const Rational& b, const Rational& c, long long n);

/// v_{kj} = (2c/(b+sqrt(D)))^k sum_i C(j,i) C(N-j,k-i) ((b+sqrt(D))/(b-sqrt(D)))^i.
std::vector<QuadExt> eigenvector_abc(const Rational& a, const Rational& b, const Rational& c,
                                     long long n, long long j);

/// The αδ = βγ locus. β = δ = 0 gives eigenvalue 0 with eigenvector e_0;
/// βδ != 0 gives eigenvalue αδN with the coefficients of (α+βz)^N. Both
/// multiplicities are certified: the characteristic polynomial must equal
/// (x-μ)^{N+1} and rank(J - μI) is computed by fraction-free elimination.
DegenerateReport degenerate_analysis(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta, long long n);

/// Right eigenvector from a left one: v = Δ^{-1} u^T where δ_0 = 1 and
/// δ_{k+1} = δ_k super_k / sub_k (this Δ conjugates T onto T^T). Needs all
/// off-diagonal entries nonzero.
std::vector<QuadExt> left_to_right(const Tridiagonal& t, const std::vector<QuadExt>& u);

/// True iff v != 0 and T v = λ v (right) or u T = λ u (left), exactly.
bool verify_eigenpair(const Tridiagonal& t, const QuadExt& lambda,
                      const std::vector<QuadExt>& v, Side side);

/// Rank over Q by Bareiss fraction-free elimination on the cleared-
/// denominator integer matrix.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& m);

/// True iff u and v are nonzero and proportional (exact cross-multiplication).
bool proportional(const std::vector<QuadExt>& u, const std::vector<QuadExt>& v);

} // namespace kacspec

#endif // KACSPEC_SPECTRAL_HPP
