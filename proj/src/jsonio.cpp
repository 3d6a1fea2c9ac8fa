#include "qhecke/jsonio.hpp"

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

Json laurent_to_json(const Rational& content, long lo, const IntPoly& p) {
    Json c = Json::array();
    for (int i = 0; i <= p.degree(); ++i) c.push_back(to_string(content * Rational(p.coeff(i))));
    Json out;
    out["lo"] = lo;
    out["c"] = std::move(c);
    return out;
}

std::pair<long, std::vector<Rational>> laurent_from_json(const Json& j) {
    long lo = j.at("lo").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("c")) coeffs.push_back(parse_rational(s.get<std::string>()));
    return {lo, std::move(coeffs)};
}

ScalarQ laurent_scalar(long lo, const std::vector<Rational>& coeffs) {
    ScalarQ acc;
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc += ScalarQ(coeffs[i]) * ScalarQ::v(lo + static_cast<long>(i));
    return acc;
}

}  // namespace

Json scalar_to_json(const ScalarQ& x) {
    Json out;
    out["num"] = laurent_to_json(x.content(), x.vshift(), x.num());
    out["den"] = laurent_to_json(Rational(1), 0, x.den());
    return out;
}

Json scalar_to_json(const Rational& x) { return Json(to_string(x)); }

template <>
ScalarQ scalar_from_json<ScalarQ>(const Json& j) {
    auto [nlo, ncs] = laurent_from_json(j.at("num"));
    auto [dlo, dcs] = laurent_from_json(j.at("den"));
    ScalarQ den = laurent_scalar(dlo, dcs);
    if (den.is_zero()) throw Error("ParseError", "zero denominator in scalar");
    return laurent_scalar(nlo, ncs) / den;
}

template <>
Rational scalar_from_json<Rational>(const Json& j) {
    return parse_rational(j.get<std::string>());
}

}  // namespace qhecke
