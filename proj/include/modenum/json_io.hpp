#pragma once

#include <json.hpp>

#include "modenum/count_table.hpp"
#include "modenum/polynomial.hpp"

namespace modenum {

/// Polynomial as a dense array of [numerator, denominator] decimal-string
/// pairs indexed by exponent; the zero polynomial is [].  Big values are
/// strings so consumers never truncate them to 64 bits.
inline nlohmann::json poly_to_json(const Polynomial& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : a.coeffs()) {
        arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    return arr;
}

inline Polynomial poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& pair : j) {
        BigInt num(pair.at(0).get<std::string>());
        BigInt den(pair.at(1).get<std::string>());
        coeffs.push_back(make_rational(num, den));
    }
    return Polynomial(std::move(coeffs));
}

inline std::string rational_to_string(const Rational& v) {
    return is_integer(v) ? v.get_num().get_str()
                         : v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline nlohmann::json count_table_to_json(const CountTable& t) {
    nlohmann::json values = nlohmann::json::array();
    for (const Rational& v : t.values) values.push_back(rational_to_string(v));
    return {{"n", t.n}, {"values", values}, {"provenance", to_string(t.provenance)}};
}

} // namespace modenum
