#include "kacspec/tridiagonal.hpp"

#include <stdexcept>
#include <string>

namespace kacspec {

Tridiagonal::Tridiagonal(std::vector<Rational> sub, std::vector<Rational> main, std::vector<Rational> super)
    : sub_(std::move(sub)), main_(std::move(main)), super_(std::move(super)) {
    if (main_.empty()) throw std::domain_error("Tridiagonal: size must be at least 1");
    if (sub_.size() + 1 != main_.size() || super_.size() + 1 != main_.size())
        throw std::domain_error("Tridiagonal: diagonal lengths must be n-1, n, n-1");
}

Rational Tridiagonal::entry(std::size_t i, std::size_t j) const {
    std::size_t n = size();
    if (i >= n || j >= n) throw std::domain_error("Tridiagonal: index out of range");
    if (i == j) return main_[i];
    if (i + 1 == j) return super_[i];
    if (j + 1 == i) return sub_[j];
    return Rational(0);
}

std::vector<std::vector<Rational>> Tridiagonal::to_dense() const {
    std::size_t n = size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = main_[k];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        m[k][k + 1] = super_[k];
        m[k + 1][k] = sub_[k];
    }
    return m;
}

namespace {

void require_order(long long n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": N must be >= 1");
}

} // namespace

Tridiagonal build_general(const Rational& alpha, const Rational& beta,
                          const Rational& gamma, const Rational& delta, long long n) {
    require_order(n, "build_general");
    Rational ag = alpha * gamma;
    Rational ad_bg = alpha * delta + beta * gamma;
    Rational bd = beta * delta;
    std::vector<Rational> sub, main, super;
    for (long long k = 0; k <= n; ++k) main.push_back(Rational(k) * ad_bg);
    for (long long k = 0; k < n; ++k) {
        super.push_back(Rational(k + 1) * ag);
        sub.push_back(-(Rational(n - k) * bd));
    }
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

Tridiagonal build_sylvester_kac(long long n) {
    require_order(n, "build_sylvester_kac");
    std::vector<Rational> sub, main(static_cast<std::size_t>(n) + 1, Rational(0)), super;
    for (long long k = 0; k < n; ++k) {
        super.push_back(Rational(k + 1));
        sub.push_back(Rational(n - k));
    }
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

Tridiagonal build_abc(const Rational& a, const Rational& b, const Rational& c, long long n) {
    require_order(n, "build_abc");
    std::vector<Rational> sub, main, super;
    for (long long k = 0; k <= n; ++k) main.push_back(Rational(k) * b);
    for (long long k = 0; k < n; ++k) {
        super.push_back(Rational(k + 1) * a);
        sub.push_back(-(Rational(n - k) * c));
    }
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

Tridiagonal build_appendix_matrix(AppendixKind kind, long long n) {
    require_order(n, "build_appendix_matrix");
    std::vector<Rational> sub, main(static_cast<std::size_t>(n) + 1, Rational(0)), super;
    switch (kind) {
    case AppendixKind::G:
        for (long long k = 0; k < n; ++k) {
            super.push_back(Rational(k + 1));
            sub.push_back(Rational(2 * n + 2 - k));
        }
        break;
    case AppendixKind::S:
    case AppendixKind::H:
        for (long long k = 0; k < n; ++k) {
            super.push_back(k + 1 == n ? Rational(2 * n) : Rational(k + 1));
            sub.push_back(Rational(2 * n - k));
        }
        break;
    }
    Tridiagonal t(std::move(sub), std::move(main), std::move(super));
    if (kind == AppendixKind::H) return scale(t, Rational(1, 2));
    return t;
}

Tridiagonal build_hahn(const Rational& alpha, long long n) {
    require_order(n, "build_hahn");
    Rational half_n(n, 2);
    std::vector<Rational> sub, main(static_cast<std::size_t>(n) + 1, half_n), super;
    auto denom = [&](long long i) {
        Rational d = Rational(2 * i) + Rational(2) * alpha + Rational(1);
        if (d.is_zero())
            throw std::domain_error("build_hahn: denominator 2i+2alpha+1 vanishes at i=" + std::to_string(i));
        return d;
    };
    for (long long k = 0; k < n; ++k) {
        // super entry (k, k+1) = a_k, sub entry (k+1, k) = c_{k+1}
        if (k == 0) {
            super.push_back(half_n);
        } else {
            Rational num = (Rational(k) + Rational(2) * alpha + Rational(1)) * Rational(n - k);
            super.push_back(num / (Rational(2) * denom(k)));
        }
        long long i = k + 1;
        Rational num = Rational(i) * (Rational(i) + Rational(2) * alpha + Rational(n) + Rational(1));
        sub.push_back(num / (Rational(2) * denom(i)));
    }
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

std::vector<QuadExt> matvec(const Tridiagonal& t, const std::vector<QuadExt>& v) {
    std::size_t n = t.size();
    if (v.size() != n) throw std::domain_error("matvec: dimension mismatch");
    std::vector<QuadExt> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        QuadExt acc = QuadExt(t.main_diag()[i]) * v[i];
        if (i > 0) acc += QuadExt(t.sub()[i - 1]) * v[i - 1];
        if (i + 1 < n) acc += QuadExt(t.super()[i]) * v[i + 1];
        r[i] = acc;
    }
    return r;
}

std::vector<QuadExt> vecmat(const std::vector<QuadExt>& u, const Tridiagonal& t) {
    std::size_t n = t.size();
    if (u.size() != n) throw std::domain_error("vecmat: dimension mismatch");
    std::vector<QuadExt> r(n);
    for (std::size_t j = 0; j < n; ++j) {
        QuadExt acc = u[j] * QuadExt(t.main_diag()[j]);
        if (j > 0) acc += u[j - 1] * QuadExt(t.super()[j - 1]);
        if (j + 1 < n) acc += u[j + 1] * QuadExt(t.sub()[j]);
        r[j] = acc;
    }
    return r;
}

Polynomial char_poly(const Tridiagonal& t) {
    std::size_t n = t.size();
    Polynomial prev = Polynomial::constant(QuadExt(1)); // det of the empty minor
    Polynomial cur = Polynomial({QuadExt(-t.main_diag()[0]), QuadExt(1)});
    for (std::size_t k = 1; k < n; ++k) {
        Polynomial lin({QuadExt(-t.main_diag()[k]), QuadExt(1)});
        Polynomial next = lin * cur - Polynomial::constant(QuadExt(t.super()[k - 1] * t.sub()[k - 1])) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Tridiagonal diag_similarity(const Tridiagonal& t, const std::vector<Rational>& d) {
    std::size_t n = t.size();
    if (d.size() != n) throw std::domain_error("diag_similarity: weight count != size");
    for (const auto& w : d)
        if (w.is_zero()) throw std::domain_error("diag_similarity: zero weight");
    std::vector<Rational> sub, super;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        super.push_back(t.super()[k] * d[k] / d[k + 1]);
        sub.push_back(t.sub()[k] * d[k + 1] / d[k]);
    }
    return Tridiagonal(std::move(sub), t.main_diag(), std::move(super));
}

Tridiagonal reversal_similarity(const Tridiagonal& t, const std::vector<Rational>& w) {
    std::size_t n = t.size();
    if (w.size() != n) throw std::domain_error("reversal_similarity: weight count != size");
    for (const auto& v : w)
        if (v.is_zero()) throw std::domain_error("reversal_similarity: zero weight");
    // (P T P^{-1})_{ij} = w_i T_{n-1-i, n-1-j} / w_j: diagonals reverse and rescale.
    std::vector<Rational> sub, main, super;
    for (std::size_t i = 0; i < n; ++i) main.push_back(t.main_diag()[n - 1 - i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        super.push_back(t.sub()[n - 2 - i] * w[i] / w[i + 1]);
        sub.push_back(t.super()[n - 2 - i] * w[i + 1] / w[i]);
    }
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

bool is_persymmetric(const Tridiagonal& t) {
    std::size_t n = t.size();
    for (std::size_t k = 0; k < n; ++k)
        if (t.main_diag()[k] != t.main_diag()[n - 1 - k]) return false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (t.super()[k] != t.super()[n - 2 - k]) return false;
        if (t.sub()[k] != t.sub()[n - 2 - k]) return false;
    }
    return true;
}

Tridiagonal transpose(const Tridiagonal& t) {
    return Tridiagonal(t.super(), t.main_diag(), t.sub());
}

Tridiagonal scale(const Tridiagonal& t, const Rational& s) {
    std::vector<Rational> sub, main, super;
    for (const auto& v : t.sub()) sub.push_back(v * s);
    for (const auto& v : t.main_diag()) main.push_back(v * s);
    for (const auto& v : t.super()) super.push_back(v * s);
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

Tridiagonal shift_diag(const Tridiagonal& t, const Rational& s) {
    std::vector<Rational> main;
    for (const auto& v : t.main_diag()) main.push_back(v + s);
    return Tridiagonal(t.sub(), std::move(main), t.super());
}

Tridiagonal leading_principal(const Tridiagonal& t, std::size_t m) {
    if (m < 1 || m > t.size()) throw std::domain_error("leading_principal: bad size");
    std::vector<Rational> sub(t.sub().begin(), t.sub().begin() + (m - 1));
    std::vector<Rational> main(t.main_diag().begin(), t.main_diag().begin() + m);
    std::vector<Rational> super(t.super().begin(), t.super().begin() + (m - 1));
    return Tridiagonal(std::move(sub), std::move(main), std::move(super));
}

} // namespace kacspec
