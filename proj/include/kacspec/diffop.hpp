#ifndef KACSPEC_DIFFOP_HPP
#define KACSPEC_DIFFOP_HPP

#include "kacspec/polynomial.hpp"
#include "kacspec/quadext.hpp"
#include "kacspec/rational.hpp"

namespace kacspec {

/// Parameters of the first-order operator
///   L_N w = (α+βz)(γ+δz) w' - βδN z w
/// acting on polynomials of degree at most N.
struct OperatorParams {
    Rational alpha, beta, gamma, delta;
    long long n = 1;

    Rational discriminant() const { return alpha * delta - beta * gamma; }
};

/// Applies L_N in coefficient space; the degree-N space is invariant (the
/// z^{N+1} terms cancel exactly).
Polynomial apply_operator(const OperatorParams& params, const Polynomial& p);

/// The three-coefficient specialization (a+bz+cz^2) p' - Ncz p.
Polynomial apply_operator_abc(const Rational& a, const Rational& b, const Rational& c,
                              long long n, const Polynomial& p);

/// The expanded eigenpolynomial w_j(z) = (α+βz)^j (γ+δz)^{N-j}, 0 <= j <= N.
Polynomial eigenpolynomial(const OperatorParams& params, long long j);

/// μ_j = αδN - (αδ-βγ) j for any integer j (negative and above-N indices
/// cover the rational-eigenfunction spectrum).
Rational mobius_eigen_map(const OperatorParams& params, long long j);

/// λ_j = j (b+sqrt(D))/2 + (N-j)(b-sqrt(D))/2 for any integer j.
QuadExt abc_eigenvalue(const Rational& a, const Rational& b, const Rational& c,
                       long long n, long long j);

/**
 * Eigenfunction in factored form: scale * (z - root1)^exp1 * (z - root2)^exp2.
 * Negative exponents stand for poles and never get expanded; for
 * 0 <= exp1, exp2 the function is a polynomial and expand() is available.
 */
struct FactoredEigenfunction {
    long long j = 0;
    QuadExt scale;
    QuadExt root1, root2;
    long long exp1 = 0, exp2 = 0;

    /// Exact value at z; evaluation at a pole is a domain error.
    QuadExt eval(const QuadExt& z) const;

    /// Exact derivative value at z (exponent-weighted product rule).
    QuadExt derivative_eval(const QuadExt& z) const;

    bool is_pole(const QuadExt& z) const;

    /// Expansion into a Polynomial; requires both exponents >= 0.
    Polynomial expand() const;
};

/// Q_j of the (a,b,c) family, for any integer j:
///   Q_j(z) = (2c)^N / ((sqrt(D)-b)^j (sqrt(D)+b)^{N-j})
///            * (z - (sqrt(D)-b)/(2c))^j (z + (sqrt(D)+b)/(2c))^{N-j}.
FactoredEigenfunction rational_eigenfunction(const Rational& a, const Rational& b, const Rational& c,
                                             long long n, long long j);

/// Q_j evaluated at z.
QuadExt rational_eigenfunction_eval(const Rational& a, const Rational& b, const Rational& c,
                                    long long n, long long j, const QuadExt& z);

/// True iff applying the operator in coefficient space agrees with the
/// matrix-vector product by J_N, coefficientwise and exactly.
bool operator_matrix_consistency(const OperatorParams& params, const Polynomial& p);

} // namespace kacspec

#endif // KACSPEC_DIFFOP_HPP
