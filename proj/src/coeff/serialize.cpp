#include "qschur/serialize.hpp"

#include <stdexcept>

namespace qschur {

namespace {

constexpr std::int64_t kExactDoubleLimit = std::int64_t{1} << 53;

Json integer_json(const Integer& x) {
    if (x.is_small() && x.small_value() < kExactDoubleLimit && x.small_value() > -kExactDoubleLimit)
        return x.small_value();
    return x.to_string();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

}  // namespace

Json to_json(const Laurent& p) {
    Json out = Json::array();
    for (const auto& t : p.terms()) out.push_back(Json::array({t.exp, integer_json(t.coeff.re), integer_json(t.coeff.im)}));
    return out;
}

Json to_json(const RationalFunction& x) { return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

Laurent laurent_from_json(const Json& j) {
    if (j.is_string()) return Laurent::parse(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array or a string");
    std::vector<Laurent::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("Laurent term must be [exp, re, im]");
        terms.push_back({t[0].get<int>(), GaussianInt(integer_from_json(t[1]), integer_from_json(t[2]))});
    }
    return Laurent::from_terms(std::move(terms));
}

RationalFunction rational_from_json(const Json& j) {
    if (j.is_string()) return RationalFunction::parse(j.get<std::string>());
    if (j.is_object()) return {laurent_from_json(j.at("num")), laurent_from_json(j.at("den"))};
    return {laurent_from_json(j)};
}

}  // namespace qschur
