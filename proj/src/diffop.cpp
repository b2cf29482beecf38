#include "kacspec/diffop.hpp"

#include <stdexcept>
#include <string>

#include "kacspec/error.hpp"
#include "kacspec/tridiagonal.hpp"

namespace kacspec {

namespace {

void require_order(long long n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": N must be >= 1");
}

void require_degree(const Polynomial& p, long long n, const char* who) {
    if (auto d = p.degree(); d && static_cast<long long>(*d) > n)
        throw std::domain_error(std::string(who) + ": deg(p) exceeds N");
}

Polynomial apply_quadratic_operator(const Rational& c0, const Rational& c1, const Rational& c2,
                                    const Rational& zcoeff, long long n, const Polynomial& p) {
    // (c0 + c1 z + c2 z^2) p' + zcoeff * z * p
    Polynomial quad = Polynomial::from_rational({c0, c1, c2});
    Polynomial result = quad * p.derivative() + Polynomial::monomial(QuadExt(zcoeff), 1) * p;
    if (auto d = result.degree(); d && static_cast<long long>(*d) > n)
        throw internal_error("operator image escaped C_N[z]; leading terms failed to cancel");
    return result;
}

} // namespace

Polynomial apply_operator(const OperatorParams& params, const Polynomial& p) {
    require_order(params.n, "apply_operator");
    require_degree(p, params.n, "apply_operator");
    Rational bd = params.beta * params.delta;
    return apply_quadratic_operator(params.alpha * params.gamma,
                                    params.alpha * params.delta + params.beta * params.gamma,
                                    bd, -(bd * Rational(params.n)), params.n, p);
}

Polynomial apply_operator_abc(const Rational& a, const Rational& b, const Rational& c,
                              long long n, const Polynomial& p) {
    require_order(n, "apply_operator_abc");
    require_degree(p, n, "apply_operator_abc");
    return apply_quadratic_operator(a, b, c, -(c * Rational(n)), n, p);
}

Polynomial eigenpolynomial(const OperatorParams& params, long long j) {
    require_order(params.n, "eigenpolynomial");
    if (j < 0 || j > params.n) throw std::domain_error("eigenpolynomial: j out of range 0..N");
    Polynomial first = Polynomial::from_rational({params.alpha, params.beta});
    Polynomial second = Polynomial::from_rational({params.gamma, params.delta});
    return first.pow(static_cast<unsigned long long>(j)) *
           second.pow(static_cast<unsigned long long>(params.n - j));
}

Rational mobius_eigen_map(const OperatorParams& params, long long j) {
    require_order(params.n, "mobius_eigen_map");
    Rational d = params.discriminant();
    if (d.is_zero()) throw std::domain_error("mobius_eigen_map: alpha*delta = beta*gamma");
    return params.alpha * params.delta * Rational(params.n) - d * Rational(j);
}

QuadExt abc_eigenvalue(const Rational& a, const Rational& b, const Rational& c,
                       long long n, long long j) {
    require_order(n, "abc_eigenvalue");
    Rational d = b * b - Rational(4) * a * c;
    if (d.is_zero()) throw std::domain_error("abc_eigenvalue: D = 0 (degenerate)");
    QuadExt s = QuadExt::sqrt_of(d);
    QuadExt half(Rational(1, 2));
    return QuadExt(Rational(j)) * (QuadExt(b) + s) * half +
           QuadExt(Rational(n - j)) * (QuadExt(b) - s) * half;
}

QuadExt FactoredEigenfunction::eval(const QuadExt& z) const {
    if (is_pole(z)) throw std::domain_error("FactoredEigenfunction: evaluation at a pole");
    return scale * (z - root1).pow(exp1) * (z - root2).pow(exp2);
}

QuadExt FactoredEigenfunction::derivative_eval(const QuadExt& z) const {
    if (is_pole(z)) throw std::domain_error("FactoredEigenfunction: evaluation at a pole");
    QuadExt f1 = z - root1, f2 = z - root2;
    QuadExt acc;
    if (exp1 != 0) acc += QuadExt(Rational(exp1)) * f1.pow(exp1 - 1) * f2.pow(exp2);
    if (exp2 != 0) acc += QuadExt(Rational(exp2)) * f1.pow(exp1) * f2.pow(exp2 - 1);
    return scale * acc;
}

bool FactoredEigenfunction::is_pole(const QuadExt& z) const {
    return (exp1 < 0 && z == root1) || (exp2 < 0 && z == root2);
}

Polynomial FactoredEigenfunction::expand() const {
    if (exp1 < 0 || exp2 < 0)
        throw std::domain_error("FactoredEigenfunction: negative exponent, not a polynomial");
    Polynomial f1({-root1, QuadExt(Rational(1))});
    Polynomial f2({-root2, QuadExt(Rational(1))});
    return Polynomial::constant(scale) * f1.pow(static_cast<unsigned long long>(exp1)) *
           f2.pow(static_cast<unsigned long long>(exp2));
}

FactoredEigenfunction rational_eigenfunction(const Rational& a, const Rational& b, const Rational& c,
                                             long long n, long long j) {
    require_order(n, "rational_eigenfunction");
    if (a.is_zero() || c.is_zero())
        throw std::domain_error("rational_eigenfunction: a and c must be nonzero");
    Rational d = b * b - Rational(4) * a * c;
    if (d.is_zero()) throw std::domain_error("rational_eigenfunction: D = 0 (degenerate)");
    QuadExt s = QuadExt::sqrt_of(d);
    QuadExt sb_minus = s - QuadExt(b); // sqrt(D) - b
    QuadExt sb_plus = s + QuadExt(b);  // sqrt(D) + b; product = D - b^2 = -4ac != 0
    QuadExt twoc(Rational(2) * c);

    FactoredEigenfunction f;
    f.j = j;
    f.exp1 = j;
    f.exp2 = n - j;
    f.root1 = sb_minus / twoc;
    f.root2 = -(sb_plus / twoc);
    f.scale = twoc.pow(n) * sb_minus.pow(-j) * sb_plus.pow(-(n - j));
    return f;
}

QuadExt rational_eigenfunction_eval(const Rational& a, const Rational& b, const Rational& c,
                                    long long n, long long j, const QuadExt& z) {
    return rational_eigenfunction(a, b, c, n, j).eval(z);
}

bool operator_matrix_consistency(const OperatorParams& params, const Polynomial& p) {
    require_order(params.n, "operator_matrix_consistency");
    require_degree(p, params.n, "operator_matrix_consistency");
    Polynomial image = apply_operator(params, p);
    Tridiagonal j_n = build_general(params.alpha, params.beta, params.gamma, params.delta, params.n);
    std::vector<QuadExt> coeffs, expected;
    for (long long k = 0; k <= params.n; ++k) coeffs.push_back(p.coeff(static_cast<std::size_t>(k)));
    expected = matvec(j_n, coeffs);
    for (long long k = 0; k <= params.n; ++k)
        if (!(image.coeff(static_cast<std::size_t>(k)) == expected[static_cast<std::size_t>(k)]))
            return false;
    return true;
}

} // namespace kacspec
