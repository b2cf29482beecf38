#include "kacspec/io.hpp"

#include <sstream>
#include <stdexcept>

namespace kacspec {

ordered_json rational_json(const Rational& r) { return r.str(); }

ordered_json quadext_json(const QuadExt& q) {
    if (q.is_rational()) return q.rat().str();
    ordered_json j;
    j["rat"] = q.rat().str();
    j["surd"] = q.surd().str();
    j["radicand"] = q.radicand().str();
    return j;
}

ordered_json polynomial_json(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(quadext_json(c));
    return arr;
}

ordered_json matrix_json(const Tridiagonal& t) {
    ordered_json j;
    j["size"] = t.size();
    ordered_json sub = ordered_json::array(), main = ordered_json::array(), super = ordered_json::array();
    for (const auto& v : t.sub()) sub.push_back(v.str());
    for (const auto& v : t.main_diag()) main.push_back(v.str());
    for (const auto& v : t.super()) super.push_back(v.str());
    j["sub"] = std::move(sub);
    j["main"] = std::move(main);
    j["super"] = std::move(super);
    return j;
}

ordered_json report_json(const SpectralReport& r) {
    ordered_json j;
    j["family"] = r.family;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value.str();
    j["params"] = std::move(params);
    j["N"] = r.n;
    if (r.radicand) j["radicand"] = r.radicand->str();
    ordered_json values = ordered_json::array();
    for (const auto& v : r.values) values.push_back(quadext_json(v));
    j["values"] = std::move(values);
    if (!r.pairs.empty()) {
        ordered_json pairs = ordered_json::array();
        for (const auto& p : r.pairs) {
            ordered_json pj;
            pj["j"] = p.index;
            pj["value"] = quadext_json(p.value);
            ordered_json vec = ordered_json::array();
            for (const auto& x : p.vec) vec.push_back(quadext_json(x));
            pj["vector"] = std::move(vec);
            pj["verified"] = p.verified;
            pairs.push_back(std::move(pj));
        }
        j["pairs"] = std::move(pairs);
    }
    if (r.characteristic) j["char_poly"] = polynomial_json(*r.characteristic);
    return j;
}

ordered_json omega_json(const OmegaPair& p) {
    ordered_json j;
    j["N"] = p.n;
    j["omega0"] = polynomial_json(p.omega0);
    j["omega1"] = polynomial_json(p.omega1);
    return j;
}

ordered_json audit_json(const PairingAudit& a) {
    ordered_json j;
    j["family"] = a.family == AppendixKind::H ? "H" : "G";
    j["N"] = a.n;
    j["mapping"] = a.mapping;
    j["all_verified"] = a.all_verified;
    return j;
}

ordered_json eigenfunction_json(const FactoredEigenfunction& f) {
    ordered_json j;
    j["j"] = f.j;
    j["scale"] = quadext_json(f.scale);
    ordered_json factors = ordered_json::array();
    ordered_json f1, f2;
    f1["root"] = quadext_json(f.root1);
    f1["exp"] = f.exp1;
    f2["root"] = quadext_json(f.root2);
    f2["exp"] = f.exp2;
    factors.push_back(std::move(f1));
    factors.push_back(std::move(f2));
    j["factors"] = std::move(factors);
    return j;
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("rational_from_json: expected a string or an integer");
}

QuadExt quadext_from_json(const nlohmann::json& j) {
    if (j.is_object()) {
        return QuadExt::make(rational_from_json(j.at("rat")), rational_from_json(j.at("surd")),
                             rational_from_json(j.at("radicand")));
    }
    return QuadExt(rational_from_json(j));
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial_from_json: expected an array");
    std::vector<QuadExt> coeffs;
    for (const auto& c : j) coeffs.push_back(quadext_from_json(c));
    return Polynomial(std::move(coeffs));
}

Tridiagonal matrix_from_json(const nlohmann::json& j) {
    auto read = [](const nlohmann::json& arr) {
        std::vector<Rational> v;
        for (const auto& x : arr) v.push_back(rational_from_json(x));
        return v;
    };
    Tridiagonal t(read(j.at("sub")), read(j.at("main")), read(j.at("super")));
    if (j.contains("size") && j.at("size").get<std::size_t>() != t.size())
        throw std::invalid_argument("matrix_from_json: size field disagrees with diagonals");
    return t;
}

std::string value_text(const QuadExt& q) {
    if (q.is_rational()) return q.rat().str();
    std::string s;
    if (!q.rat().is_zero()) s = q.rat().str();
    Rational y = q.surd();
    if (y.sign() < 0) {
        s += "-";
        y = -y;
    } else if (!s.empty()) {
        s += "+";
    }
    if (y != Rational(1)) s += y.str() + "*";
    s += "sqrt(" + q.radicand().str() + ")";
    return s;
}

std::string matrix_csv(const Tridiagonal& t) {
    std::ostringstream out;
    for (std::size_t j = 0; j < t.size(); ++j) out << (j ? "," : "") << "c" << j;
    out << "\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) out << (j ? "," : "") << t.entry(i, j).str();
        out << "\n";
    }
    return out.str();
}

std::string values_csv(const std::vector<QuadExt>& values) {
    std::ostringstream out;
    out << "j,value\n";
    for (std::size_t j = 0; j < values.size(); ++j) out << j << "," << value_text(values[j]) << "\n";
    return out.str();
}

std::string vector_csv(const std::vector<QuadExt>& v) {
    std::ostringstream out;
    out << "k,value\n";
    for (std::size_t k = 0; k < v.size(); ++k) out << k << "," << value_text(v[k]) << "\n";
    return out.str();
}

} // namespace kacspec
