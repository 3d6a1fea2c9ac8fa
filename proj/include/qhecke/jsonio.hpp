#pragma once

#include <json.hpp>

#include "qhecke/hecke.hpp"
#include "qhecke/scalar.hpp"
#include "qhecke/tableaux.hpp"

namespace qhecke {

// Insertion-ordered JSON keeps CLI output byte-stable across runs.
using Json = nlohmann::ordered_json;

// ScalarQ wire form: numerator and denominator as (lowest exponent of v,
// ascending coefficients as "p/q" strings). The numerator carries the overall
// rational content.
Json scalar_to_json(const ScalarQ& x);
Json scalar_to_json(const Rational& x);

template <class K>
K scalar_from_json(const Json& j);
template <>
ScalarQ scalar_from_json<ScalarQ>(const Json& j);
template <>
Rational scalar_from_json<Rational>(const Json& j);

template <class K>
Json element_to_json(const HeckeElement<K>& a) {
    Json terms = Json::array();
    for (const auto& [w, c] : a.terms) {
        Json t;
        t["w"] = w.to_string();
        t["c"] = scalar_to_json(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["n"] = a.degree;
    out["terms"] = std::move(terms);
    return out;
}

template <class K>
HeckeElement<K> element_from_json(const Json& j) {
    HeckeElement<K> e{j.at("n").get<int>(), {}};
    for (const auto& t : j.at("terms")) {
        Permutation w = Permutation::parse(t.at("w").get<std::string>());
        e.add_term(w, scalar_from_json<K>(t.at("c")));
    }
    return e;
}

}  // namespace qhecke
