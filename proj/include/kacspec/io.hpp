#ifndef KACSPEC_IO_HPP
#define KACSPEC_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kacspec/appendix.hpp"
#include "kacspec/diffop.hpp"
#include "kacspec/polynomial.hpp"
#include "kacspec/quadext.hpp"
#include "kacspec/rational.hpp"
#include "kacspec/spectral.hpp"
#include "kacspec/tridiagonal.hpp"

namespace kacspec {

using ordered_json = nlohmann::ordered_json;

/**
 * Eigenvalue/eigenvector bundle for the CLI. "values" is always present;
 * "pairs" carries eigenvectors and verification verdicts when they were
 * computed. Key order in the JSON form is fixed: family, params, N,
 * radicand, values, pairs, char_poly.
 */
struct SpectralReport {
    std::string family;
    std::vector<std::pair<std::string, Rational>> params;
    long long n = 0;
    std::optional<Rational> radicand;
    std::vector<QuadExt> values;
    std::vector<EigenPair> pairs;
    std::optional<Polynomial> characteristic;
};

/// Rationals serialize as "p/q" ("p" when q = 1); a QuadExt value collapses
/// to that string form when it is rational and is an object
/// {"rat","surd","radicand"} otherwise.
ordered_json rational_json(const Rational& r);
ordered_json quadext_json(const QuadExt& q);
ordered_json polynomial_json(const Polynomial& p);
ordered_json matrix_json(const Tridiagonal& t);
ordered_json report_json(const SpectralReport& r);
ordered_json omega_json(const OmegaPair& p);
ordered_json audit_json(const PairingAudit& a);
ordered_json eigenfunction_json(const FactoredEigenfunction& f);

Rational rational_from_json(const nlohmann::json& j);
QuadExt quadext_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);
Tridiagonal matrix_from_json(const nlohmann::json& j);

/// Plain-text exact rendering used in CSV cells ("p/q" or "x+y*sqrt(d)").
std::string value_text(const QuadExt& q);

/// Dense CSV: header c0..c{n-1}, then n exact rows.
std::string matrix_csv(const Tridiagonal& t);

/// Spectrum CSV: header "j,value".
std::string values_csv(const std::vector<QuadExt>& values);

/// Vector CSV: header "k,value".
std::string vector_csv(const std::vector<QuadExt>& v);

} // namespace kacspec

#endif // KACSPEC_IO_HPP
