#ifndef KACSPEC_QUADEXT_HPP
#define KACSPEC_QUADEXT_HPP

#include <stdexcept>
#include <string>

#include "kacspec/rational.hpp"

namespace kacspec {

/**
 * Element x + y*sqrt(d) of a quadratic extension of the rationals.
 *
 * Normal form: whenever d is the square of a rational (0 included) the value
 * collapses into the rational part and the stored radicand becomes 0;
 * likewise a vanishing surd coefficient resets the radicand to 0. Hence a
 * value is "genuinely irrational" iff surd() != 0, and componentwise
 * equality decides equality of values.
 *
 * Two values can be combined when their radicands agree or at least one of
 * them is rational; mixing two different non-square radicands is an error
 * (no field towers — a single sqrt(D) at a time is all that is needed).
 * The radicand may be negative.
 */
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& r) : rat_(r) {}
    QuadExt(int v) : rat_(Rational(v)) {}
    QuadExt(long long v) : rat_(Rational(v)) {}

    /// Normalizing constructor for x + y*sqrt(d).
    static QuadExt make(const Rational& x, const Rational& y, const Rational& d) {
        QuadExt u;
        u.rat_ = x;
        u.surd_ = y;
        u.rad_ = d;
        u.normalize();
        return u;
    }

    /// sqrt(d) itself (collapses when d is a perfect square).
    static QuadExt sqrt_of(const Rational& d) { return make(Rational(0), Rational(1), d); }

    const Rational& rat() const { return rat_; }
    const Rational& surd() const { return surd_; }
    const Rational& radicand() const { return rad_; }

    bool is_rational() const { return surd_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

    /// The rational value, provided there is no surd part.
    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("QuadExt: value is not rational");
        return rat_;
    }

    QuadExt conjugate() const {
        QuadExt u = *this;
        u.surd_ = -u.surd_;
        u.normalize();
        return u;
    }

    /// Field norm x^2 - y^2 d; zero only for the zero value once normalized.
    Rational norm() const { return rat_ * rat_ - surd_ * surd_ * rad_; }

    QuadExt operator-() const {
        QuadExt u = *this;
        u.rat_ = -u.rat_;
        u.surd_ = -u.surd_;
        return u;
    }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        Rational d = resolve_radicand(a, b);
        QuadExt u;
        u.rat_ = a.rat_ + b.rat_;
        u.surd_ = a.surd_ + b.surd_;
        u.rad_ = d;
        u.normalize();
        return u;
    }

    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        Rational d = resolve_radicand(a, b);
        QuadExt u;
        u.rat_ = a.rat_ * b.rat_ + a.surd_ * b.surd_ * d;
        u.surd_ = a.rat_ * b.surd_ + b.rat_ * a.surd_;
        u.rad_ = d;
        u.normalize();
        return u;
    }

    QuadExt inverse() const {
        if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
        if (is_rational()) return QuadExt(rat_.inverse());
        // norm != 0 here: rad_ is not a perfect square after normalization,
        // so x^2 = y^2 d with y != 0 is impossible.
        Rational n = norm();
        QuadExt u;
        u.rat_ = rat_ / n;
        u.surd_ = -surd_ / n;
        u.rad_ = rad_;
        u.normalize();
        return u;
    }

    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    /// Integer power, negative exponents through the inverse.
    QuadExt pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadExt acc(Rational(1));
        QuadExt base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.rat_ == b.rat_ && a.surd_ == b.surd_ && a.rad_ == b.rad_;
    }

    std::string str() const {
        if (is_rational()) return rat_.str();
        std::string s = rat_.is_zero() ? "" : rat_.str() + " + ";
        return s + surd_.str() + "*sqrt(" + rad_.str() + ")";
    }

private:
    void normalize() {
        if (!surd_.is_zero()) {
            if (auto s = rad_.sqrt_exact()) {
                rat_ += surd_ * *s;
                surd_ = Rational(0);
            }
        }
        if (surd_.is_zero()) rad_ = Rational(0);
    }

    static Rational resolve_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.surd_.is_zero()) return b.rad_;
        if (b.surd_.is_zero()) return a.rad_;
        if (a.rad_ != b.rad_)
            throw std::domain_error("QuadExt: incompatible radicands " + a.rad_.str() + " and " + b.rad_.str());
        return a.rad_;
    }

    Rational rat_;
    Rational surd_;
    Rational rad_;
};

} // namespace kacspec

#endif // KACSPEC_QUADEXT_HPP
