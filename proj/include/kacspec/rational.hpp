#ifndef KACSPEC_RATIONAL_HPP
#define KACSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace kacspec {

/**
 * Arbitrary-precision rational number.
 *
 * Canonical form is maintained after every operation: denominator > 0 and
 * gcd(|numerator|, denominator) = 1. Backed by GMP's mpq_class; this wrapper
 * pins down construction, string form ("p/q", or "p" when q = 1) and the
 * error behaviour the rest of the library relies on.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(from_ll(v)) {}
    explicit Rational(const mpz_class& v) : q_(v) {}

    Rational(long long num, long long den) : Rational(mpz_class(from_ll(num)), mpz_class(from_ll(den))) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "p", "-p", or "p/q" with decimal integer p, q. Anything else
    /// (decimals in particular) is rejected.
    static Rational parse(const std::string& s) {
        auto bad = [&]() -> Rational {
            throw std::invalid_argument("Rational: cannot parse \"" + s + "\" (expected p or p/q)");
        };
        if (s.empty()) return bad();
        auto slash = s.find('/');
        std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
        std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false)) return bad();
        if (num[0] == '+') num.erase(0, 1); // GMP rejects a leading '+'
        mpz_class n(num), d(den);
        if (d == 0) throw std::domain_error("Rational: zero denominator in \"" + s + "\"");
        return Rational(n, d);
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return from_mpq(mpq_class(-q_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return from_mpq(mpq_class(a.q_ / b.q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Integer power; negative exponents invert (and reject zero).
    Rational pow(long long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
            return inverse().pow(-e);
        }
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root if this is the square of a rational, std::nullopt
    /// otherwise (negatives and non-squares alike). The root is >= 0.
    std::optional<Rational> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t()))
            return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(n, d);
    }

    bool is_perfect_square() const { return sqrt_exact().has_value(); }

    std::string str() const {
        std::string s = num().get_str();
        if (!is_integer()) s += "/" + den().get_str();
        return s;
    }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    static mpz_class from_ll(long long v) {
        // via the magnitude so the width of long does not matter
        unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v)
                                       : static_cast<unsigned long long>(v);
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, -1, sizeof(mag), 0, 0, &mag);
        if (v < 0) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
        return z;
    }

    static bool valid_int(const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }

    mpq_class q_;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long long b) { return a * Rational(b); }

} // namespace kacspec

#endif // KACSPEC_RATIONAL_HPP
