#ifndef KACSPEC_POLYNOMIAL_HPP
#define KACSPEC_POLYNOMIAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kacspec/quadext.hpp"

namespace kacspec {

/**
 * Dense univariate polynomial with QuadExt coefficients, coefficient k being
 * the coefficient of z^k. Trailing zeros are trimmed; the zero polynomial
 * has an empty coefficient vector and no degree.
 */
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<QuadExt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial from_rational(const std::vector<Rational>& coeffs) {
        std::vector<QuadExt> c(coeffs.begin(), coeffs.end());
        return Polynomial(std::move(c));
    }

    static Polynomial constant(const QuadExt& v) { return Polynomial({v}); }

    /// c * z^k
    static Polynomial monomial(const QuadExt& c, std::size_t k) {
        std::vector<QuadExt> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    /// The variable z.
    static Polynomial x() { return monomial(QuadExt(1), 1); }

    bool is_zero() const { return c_.empty(); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    /// Coefficient of z^k (0 beyond the stored range).
    QuadExt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : QuadExt(); }

    const std::vector<QuadExt>& coeffs() const { return c_; }

    QuadExt leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& v : p.c_) v = -v;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<QuadExt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<QuadExt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const QuadExt& s, const Polynomial& p) {
        Polynomial q = p;
        for (auto& v : q.c_) v = s * v;
        q.trim();
        return q;
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial pow(unsigned long long e) const {
        Polynomial acc = constant(QuadExt(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<QuadExt> c(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = QuadExt(Rational(static_cast<long long>(k))) * c_[k];
        return Polynomial(std::move(c));
    }

    /// Horner evaluation.
    QuadExt eval(const QuadExt& x) const {
        QuadExt acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    /// Exact long division: num = q*den + r with deg(r) < deg(den).
    friend std::pair<Polynomial, Polynomial> divide(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw std::domain_error("Polynomial: division by the zero polynomial");
        Polynomial r = num;
        std::size_t dd = *den.degree();
        QuadExt lead_inv = den.leading().inverse();
        std::vector<QuadExt> q;
        if (!r.is_zero() && *r.degree() >= dd) q.assign(*r.degree() - dd + 1, QuadExt());
        while (!r.is_zero() && *r.degree() >= dd) {
            std::size_t k = *r.degree() - dd;
            QuadExt f = r.leading() * lead_inv;
            q[k] = f;
            r -= monomial(f, k) * den;
        }
        return {Polynomial(std::move(q)), r};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[k].str() + ")";
            if (k == 1) s += "*z";
            else if (k > 1) s += "*z^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<QuadExt> c_;
};

} // namespace kacspec

#endif // KACSPEC_POLYNOMIAL_HPP
