#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "kacspec/combinatorics.hpp"
#include "kacspec/diffop.hpp"
#include "kacspec/spectral.hpp"
#include "kacspec/tridiagonal.hpp"
#include "test_support.hpp"

using namespace kacspec;
using kacspec::testing::make_rng;
using kacspec::testing::random_rational;

namespace {

OperatorParams random_params(std::mt19937_64& rng, long long n, bool nondegenerate = true) {
    for (;;) {
        OperatorParams p{random_rational(rng, 6, 3, true), random_rational(rng, 6, 3, true),
                         random_rational(rng, 6, 3, true), random_rational(rng, 6, 3, true), n};
        if (!nondegenerate || !p.discriminant().is_zero()) return p;
    }
}

Polynomial random_poly(std::mt19937_64& rng, long long max_degree) {
    std::uniform_int_distribution<long long> deg(0, max_degree);
    std::vector<QuadExt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = QuadExt(random_rational(rng));
    return Polynomial(std::move(c));
}

const OperatorParams kac2{Rational(1), Rational(1), Rational(1), Rational(-1), 2};

} // namespace

TEST_CASE("apply_operator stated examples") {
    CHECK(apply_operator(kac2, Polynomial::constant(QuadExt(Rational(1)))) ==
          Polynomial::from_rational({Rational(0), Rational(2)}));

    Polynomial w1 = Polynomial::from_rational({Rational(1), Rational(0), Rational(-1)});
    CHECK(apply_operator(kac2, w1).is_zero());

    CHECK(apply_operator(kac2, Polynomial()).is_zero());

    Polynomial cubic = Polynomial::from_rational({Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK_THROWS_AS(apply_operator(kac2, cubic), std::domain_error);
}

TEST_CASE("apply_operator_abc stated examples") {
    CHECK(apply_operator_abc(Rational(1), Rational(0), Rational(-1), 2,
                             Polynomial::constant(QuadExt(Rational(1)))) ==
          Polynomial::from_rational({Rational(0), Rational(2)}));

    CHECK(apply_operator_abc(Rational(1), Rational(1), Rational(1), 1, Polynomial::x()) ==
          Polynomial::from_rational({Rational(1), Rational(1)}));

    // constant input: derivative term vanishes, -Nc kappa z remains
    CHECK(apply_operator_abc(Rational(3), Rational(5), Rational(7), 4,
                             Polynomial::constant(QuadExt(Rational(2)))) ==
          Polynomial::from_rational({Rational(0), Rational(-56)}));
}

TEST_CASE("classic operator z d/dz on monomials") {
    // a = 0, b = 1, c = 0 reduces the operator to z d/dz with eigenpairs (j, z^j)
    for (long long n = 1; n <= 10; ++n) {
        for (long long j = 0; j <= n; ++j) {
            Polynomial zj = Polynomial::monomial(QuadExt(Rational(1)), static_cast<std::size_t>(j));
            Polynomial image = apply_operator_abc(Rational(0), Rational(1), Rational(0), n, zj);
            CHECK(image == QuadExt(Rational(j)) * zj);
        }
    }
}

TEST_CASE("eigenpolynomial stated examples") {
    CHECK(eigenpolynomial(kac2, 1) ==
          Polynomial::from_rational({Rational(1), Rational(0), Rational(-1)}));
    CHECK(eigenpolynomial(kac2, 0) ==
          Polynomial::from_rational({Rational(1), Rational(-2), Rational(1)}));

    OperatorParams p{Rational(2), Rational(3), Rational(5), Rational(7), 3};
    Polynomial top = eigenpolynomial(p, 3); // (alpha + beta z)^N
    for (long long k = 0; k <= 3; ++k)
        CHECK(top.coeff(static_cast<std::size_t>(k)) ==
              QuadExt(Rational(binomial(3, k)) * Rational(2).pow(3 - k) * Rational(3).pow(k)));

    CHECK_THROWS_AS(eigenpolynomial(kac2, 3), std::domain_error);
    CHECK_THROWS_AS(eigenpolynomial(kac2, -1), std::domain_error);
}

TEST_CASE("eigenpolynomial equals scaled eigenvector_general") {
    auto rng = make_rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        long long n = 1 + static_cast<long long>(trial % 6);
        OperatorParams p = random_params(rng, n);
        for (long long j = 0; j <= n; ++j) {
            Polynomial w = eigenpolynomial(p, j);
            auto v = eigenvector_general(p.alpha, p.beta, p.gamma, p.delta, n, j);
            Rational scale = p.alpha.pow(j) * p.gamma.pow(n - j);
            for (long long k = 0; k <= n; ++k)
                CHECK(w.coeff(static_cast<std::size_t>(k)) ==
                      QuadExt(scale * v[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("mobius_eigen_map stated examples") {
    CHECK(mobius_eigen_map(kac2, 1) == Rational(0));
    CHECK(mobius_eigen_map(kac2, 0) == Rational(-2)); // alpha*delta*N
    CHECK(mobius_eigen_map(kac2, -1) == Rational(-4));
    OperatorParams degenerate{Rational(1), Rational(1), Rational(2), Rational(2), 2};
    CHECK_THROWS_AS(mobius_eigen_map(degenerate, 0), std::domain_error);
}

TEST_CASE("eigen identity: L_N w_j = mu_j w_j for 0 <= j <= N") {
    auto rng = make_rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        long long n = 1 + static_cast<long long>(trial % 10);
        OperatorParams p = random_params(rng, n);
        for (long long j = 0; j <= n; ++j) {
            Polynomial w = eigenpolynomial(p, j);
            CHECK(apply_operator(p, w) == QuadExt(mobius_eigen_map(p, j)) * w);
        }
    }
}

TEST_CASE("mobius map matches the matrix eigenvalues on 0..N") {
    auto rng = make_rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        long long n = 1 + static_cast<long long>(trial % 6);
        OperatorParams p = random_params(rng, n);
        auto mu = eigenvalues_general(p.alpha, p.beta, p.gamma, p.delta, n);
        for (long long j = 0; j <= n; ++j)
            CHECK(mobius_eigen_map(p, j) == mu[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("operator image never escapes C_N[z]") {
    auto rng = make_rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        long long n = 1 + static_cast<long long>(trial % 7);
        OperatorParams p = random_params(rng, n, false);
        Polynomial q = random_poly(rng, n);
        Polynomial image = apply_operator(p, q);
        if (auto d = image.degree()) CHECK(static_cast<long long>(*d) <= n);
    }
}

TEST_CASE("operator_matrix_consistency stated examples and random trials") {
    CHECK(operator_matrix_consistency(kac2, Polynomial::constant(QuadExt(Rational(1)))));
    CHECK(operator_matrix_consistency(kac2, Polynomial::monomial(QuadExt(Rational(1)), 2)));

    auto rng = make_rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        long long n = 1 + static_cast<long long>(trial % 8);
        OperatorParams p = random_params(rng, n, false);
        CHECK(operator_matrix_consistency(p, random_poly(rng, n)));
    }
}

TEST_CASE("rational eigenfunction values") {
    // Q_0 for (1,0,-1), N=1 is 1-z
    CHECK(rational_eigenfunction_eval(Rational(1), Rational(0), Rational(-1), 1, 0,
                                      QuadExt(Rational(0))) == QuadExt(Rational(1)));
    CHECK(rational_eigenfunction_eval(Rational(1), Rational(0), Rational(-1), 1, 0,
                                      QuadExt(Rational(1))).is_zero());
    // Q_j is normalized so that Q_j(0) = (-1)^j; hence Q_1(0) = -1 and
    // Q_1 = -(1+z) here.
    CHECK(rational_eigenfunction_eval(Rational(1), Rational(0), Rational(-1), 1, 1,
                                      QuadExt(Rational(0))) == QuadExt(Rational(-1)));
    CHECK(rational_eigenfunction_eval(Rational(1), Rational(0), Rational(-1), 1, 1,
                                      QuadExt(Rational(3))) == QuadExt(Rational(-4)));

    // Q_j(0) = (-1)^j across parameters and indices
    auto rng = make_rng(26);
    int done = 0;
    while (done < 20) {
        Rational a = random_rational(rng, 5, 3, true);
        Rational b = random_rational(rng, 5, 3);
        Rational c = random_rational(rng, 5, 3, true);
        if ((b * b - Rational(4) * a * c).is_zero()) continue;
        long long n = 1 + static_cast<long long>(done % 4);
        for (long long j = -2; j <= n + 2; ++j) {
            FactoredEigenfunction q = rational_eigenfunction(a, b, c, n, j);
            if (q.is_pole(QuadExt(Rational(0)))) continue;
            QuadExt expected(Rational(j % 2 == 0 ? 1 : -1));
            CHECK(q.eval(QuadExt(Rational(0))) == expected);
        }
        ++done;
    }
}

TEST_CASE("rational eigenfunction poles") {
    // j = -1: the factor (z - root1) has a negative exponent, so root1 is a pole
    FactoredEigenfunction q = rational_eigenfunction(Rational(1), Rational(0), Rational(-1), 1, -1);
    CHECK(q.is_pole(q.root1));
    CHECK_FALSE(q.is_pole(q.root2));
    CHECK_THROWS_AS(q.eval(q.root1), std::domain_error);

    CHECK_THROWS_AS(rational_eigenfunction(Rational(1), Rational(2), Rational(1), 1, 0),
                    std::domain_error); // D = 0
}

TEST_CASE("expanded Q_j agrees with the polynomial eigenfunctions for 0 <= j <= N") {
    // For indices inside 0..N the factored form expands to a genuine
    // eigenpolynomial of B_N: check B_N v = lambda_j v on the coefficients.
    auto rng = make_rng(27);
    int done = 0;
    while (done < 15) {
        Rational a = random_rational(rng, 5, 3, true);
        Rational b = random_rational(rng, 5, 3);
        Rational c = random_rational(rng, 5, 3, true);
        if ((b * b - Rational(4) * a * c).is_zero()) continue;
        long long n = 1 + static_cast<long long>(done % 4);
        Tridiagonal m = build_abc(a, b, c, n);
        for (long long j = 0; j <= n; ++j) {
            Polynomial qj = rational_eigenfunction(a, b, c, n, j).expand();
            std::vector<QuadExt> coeffs;
            for (long long k = 0; k <= n; ++k) coeffs.push_back(qj.coeff(static_cast<std::size_t>(k)));
            CHECK(verify_eigenpair(m, abc_eigenvalue(a, b, c, n, j), coeffs, Side::right));
        }
        ++done;
    }
}

TEST_CASE("differential identity for rational eigenfunctions at sample points") {
    // (a + bz + cz^2) Q_j'(z) - Ncz Q_j(z) == lambda_j Q_j(z) pointwise,
    // including negative and above-N indices.
    auto rng = make_rng(28);
    int done = 0;
    while (done < 10) {
        Rational a = random_rational(rng, 4, 2, true);
        Rational b = random_rational(rng, 4, 2);
        Rational c = random_rational(rng, 4, 2, true);
        if ((b * b - Rational(4) * a * c).is_zero()) continue;
        long long n = 1 + static_cast<long long>(done % 3);
        for (long long j = -3; j <= n + 3; ++j) {
            FactoredEigenfunction q = rational_eigenfunction(a, b, c, n, j);
            QuadExt lambda = abc_eigenvalue(a, b, c, n, j);
            int points = 0;
            for (long long step = -40; points < 20 && step <= 40; ++step) {
                QuadExt z(Rational(step, 3));
                if (q.is_pole(z)) continue;
                QuadExt quad = QuadExt(a) + QuadExt(b) * z + QuadExt(c) * z * z;
                QuadExt lhs = quad * q.derivative_eval(z) -
                              QuadExt(c * Rational(n)) * z * q.eval(z);
                CHECK(lhs == lambda * q.eval(z));
                ++points;
            }
            CHECK(points == 20);
        }
        ++done;
    }
}

TEST_CASE("abc_eigenvalue extends the spectrum beyond 0..N") {
    Rational a(1), b(0), c(-1);
    // K_2: lambda_j = 2j - N
    for (long long j = -3; j <= 5; ++j)
        CHECK(abc_eigenvalue(a, b, c, 2, j) == QuadExt(Rational(2 * j - 2)));
}
