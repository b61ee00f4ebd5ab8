#include "qschur/ualg.hpp"

#include <stdexcept>

#include "qschur/qnumbers.hpp"

namespace qschur {

namespace {

// E K = q K E and K F = q F K with q = v^-2 t^2.
RationalFunction q_power(int n) {
    // (v^-2 t^2)^n = (-1)^n v^(-2n)
    return RationalFunction(Laurent::monomial(GaussianInt(n % 2 == 0 ? 1 : -1), -2 * n));
}

const RationalFunction& inv_v_minus_vinv() {
    static const RationalFunction h = RationalFunction(1) / RationalFunction(Laurent::v(1) - Laurent::v(-1));
    return h;
}

std::string power_string(const char* letter, int e) {
    if (e == 1) return letter;
    return std::string(letter) + "^" + std::to_string(e);
}

}  // namespace

std::string UMonomial::to_string() const {
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " ";
        out += part;
    };
    if (a != 0) append(power_string("F", a));
    if (s != 0) append(power_string("K", s));
    if (b != 0) append(power_string("E", b));
    return out.empty() ? "1" : out;
}

UElement::UElement(const RationalFunction& c) {
    if (!c.is_zero()) terms_.emplace(UMonomial{}, c);
}

UElement UElement::monomial(UMonomial m, RationalFunction c) {
    UElement x;
    if (m.a < 0 || m.b < 0) throw std::domain_error("UMonomial with negative E/F exponent");
    if (!c.is_zero()) x.terms_.emplace(m, std::move(c));
    return x;
}

UElement UElement::divided_E(int n) {
    if (n < 0) throw std::domain_error("divided power with negative exponent");
    return monomial({0, 0, n}, RationalFunction(1) / RationalFunction(qfact_vt(n)));
}

UElement UElement::divided_F(int n) {
    if (n < 0) throw std::domain_error("divided power with negative exponent");
    return monomial({n, 0, 0}, RationalFunction(1) / RationalFunction(qfact_vt(n)));
}

RationalFunction UElement::coeff(const UMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

int UElement::parity() const {
    if (terms_.empty()) return 0;
    const int p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return -1;
    return p;
}

void UElement::add_term(const UMonomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UElement& UElement::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

UElement UElement::times_E() const {
    UElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(UMonomial{m.a, m.s, m.b + 1}, c);
    return r;
}

UElement UElement::times_K(int sign) const {
    UElement r;
    for (const auto& [m, c] : terms_) {
        // E^b K^{+-1} = q^{+-b} K^{+-1} E^b
        r.add_term({m.a, m.s + sign, m.b}, c * q_power(sign * m.b));
    }
    return r;
}

UElement UElement::times_F() const {
    UElement r;
    for (const auto& [m, c] : terms_) {
        // K^s F = q^s F K^s;  E^b F = t^{2b} F E^b + t^{2(b-1)} sum_{j<b} E^{b-1-j} H E^j
        RationalFunction lead = c * q_power(m.s);
        if (m.b % 2 == 1) lead = -lead;
        r.add_term({m.a + 1, m.s, m.b}, lead);
        if (m.b == 0) continue;
        RationalFunction base = c * inv_v_minus_vinv();
        if ((m.b - 1) % 2 == 1) base = -base;
        std::vector<Laurent::Term> down, up;
        for (int j = 0; j < m.b; ++j) {
            down.push_back({-2 * j, GaussianInt(1)});
            up.push_back({2 * j, GaussianInt(1)});
        }
        r.add_term({m.a, m.s + 1, m.b - 1}, base * RationalFunction(Laurent::from_terms(down)));
        r.add_term({m.a, m.s - 1, m.b - 1}, -(base * RationalFunction(Laurent::from_terms(up))));
    }
    return r;
}

UElement operator*(const UElement& x, const UElement& y) {
    UElement out;
    for (const auto& [m, c] : y.terms_) {
        UElement z = x;
        for (int k = 0; k < m.a; ++k) z = z.times_F();
        for (int k = 0; k < (m.s < 0 ? -m.s : m.s); ++k) z = z.times_K(m.s < 0 ? -1 : 1);
        for (int k = 0; k < m.b; ++k) z = z.times_E();
        z *= c;
        out += z;
    }
    return out;
}

UElement UElement::pow(int n) const {
    if (n < 0) throw std::domain_error("UElement::pow with negative exponent");
    UElement r(RationalFunction(1));
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

std::string UElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // Highest monomials first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) s += " + ";
        first = false;
        const std::string mono = it->first.to_string();
        if (it->second.is_one()) {
            s += mono;
        } else {
            s += "(" + it->second.to_string() + ")";
            if (mono != "1") s += " " + mono;
        }
    }
    return s;
}

Json UElement::to_json() const {
    Json out = Json::array();
    for (const auto& [m, c] : terms_)
        out.push_back(Json{{"f", m.a}, {"k", m.s}, {"e", m.b}, {"coeff", qschur::to_json(c)}});
    return out;
}

UElement UElement::from_json(const Json& j) {
    UElement x;
    for (const auto& t : j) x.add_term({t.at("f").get<int>(), t.at("k").get<int>(), t.at("e").get<int>()}, rational_from_json(t.at("coeff")));
    return x;
}

UElement ef_divided_defect(int n) {
    if (n < 1) throw std::domain_error("E F^(n) identity needs n >= 1");
    const UElement E = UElement::E(), K = UElement::K(), Ki = UElement::Kinv();
    const UElement lhs = E * UElement::divided_F(n);
    const RationalFunction h = inv_v_minus_vinv();
    UElement cartan = K * RationalFunction(Laurent::v(1 - n)) - Ki * RationalFunction(Laurent::v(n - 1));
    cartan *= h;
    const UElement rhs = UElement::divided_F(n) * E * RationalFunction(Laurent::t(2 * n)) +
                         UElement::divided_F(n - 1) * cartan * RationalFunction(Laurent::t(n - 1));
    return lhs - rhs;
}

}  // namespace qschur
