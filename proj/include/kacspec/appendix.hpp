#ifndef KACSPEC_APPENDIX_HPP
#define KACSPEC_APPENDIX_HPP

#include <cstddef>
#include <vector>

#include "kacspec/polynomial.hpp"
#include "kacspec/rational.hpp"
#include "kacspec/tridiagonal.hpp"

namespace kacspec {

/// The characteristic-polynomial split of K_{2N+2}:
/// omega1 = det(xI - G_N) and omega0 = det(xI - K_{2N+2}) / omega1,
/// the division being exact.
struct OmegaPair {
    Polynomial omega0;
    Polynomial omega1;
    long long n = 0;
};

/// Builds the split for N >= 0 (N = 0 uses the trivial 1x1 matrix G_0).
/// A nonzero division remainder is an internal error.
OmegaPair omega_pair(long long n);

/// det(xI - S_{N+1}) == omega0 of omega_pair(N), exactly.
bool s_identity_check(long long n);

/// det(xI - M_{N+1}) == (omega0 + x*omega1)/2 where M_{N+1} is the
/// (N+2)x(N+2) leading principal submatrix of K_{2N+2}.
bool m_identity_check(long long n);

/// Integer spectra: {2(2j-N)} for G and S, {2j-N} for H, j = 0..N.
/// The product of (x - λ_j) is checked against the characteristic
/// polynomial; a mismatch is an internal error.
std::vector<Rational> appendix_spectra(AppendixKind kind, long long n);

/// char_poly(C_N(α)) == prod_{j=0}^{N} (x - j), exactly (α-independence).
bool hahn_spectrum_check(const Rational& alpha, long long n);

/// Entrywise similarity relations tying H_N and G_N to the Hahn matrix:
///   H_N^T = E [2 C_N(-1/2) - N I] E^{-1}   (E: unit anti-diagonal)
///   G_N^T = R [4 C_N(+1/2) - 2N I] R^{-1}  (R: anti-diagonal, weights N+1..1)
bool relation_check(AppendixKind kind, long long n);

/// Printed left/right eigenvector formulas (Pochhammer sums). Left vectors
/// pair with λ_j directly; the right formulas' pairing is established by
/// pairing_audit, not assumed.
std::vector<Rational> h_left_eigenvector(long long n, long long j);
std::vector<Rational> g_left_eigenvector(long long n, long long j);
std::vector<Rational> h_right_eigenvector(long long n, long long j);
std::vector<Rational> g_right_eigenvector(long long n, long long j);

/// Empirical eigenvalue assignment of the closed-form right-eigenvector
/// formulas: mapping[j] is the unique j' whose eigenvalue gives an exactly
/// zero residual. Also cross-checks left_to_right against the closed-form
/// right vectors up to a scalar.
struct PairingAudit {
    AppendixKind family = AppendixKind::H;
    long long n = 0;
    std::vector<std::size_t> mapping;
    bool all_verified = false;
};

PairingAudit pairing_audit(AppendixKind family, long long n);

} // namespace kacspec

#endif // KACSPEC_APPENDIX_HPP
