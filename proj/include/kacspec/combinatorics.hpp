#ifndef KACSPEC_COMBINATORICS_HPP
#define KACSPEC_COMBINATORICS_HPP

#include <gmpxx.h>

#include <stdexcept>

#include "kacspec/rational.hpp"

namespace kacspec {

/// C(n, k) for n >= 0; out-of-range k yields 0.
inline mpz_class binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Rising factorial (a)_i = a(a+1)...(a+i-1), with (a)_0 = 1. A negative
/// integer base runs through zero once i is large enough; no special cases.
inline Rational pochhammer(const Rational& a, long long i) {
    if (i < 0) throw std::domain_error("pochhammer: negative index");
    Rational r(1);
    Rational f = a;
    for (long long m = 0; m < i; ++m) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace kacspec

#endif // KACSPEC_COMBINATORICS_HPP
