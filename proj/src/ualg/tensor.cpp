#include <stdexcept>

#include "qschur/ualg.hpp"

namespace qschur {

UTensor UTensor::pure(const std::vector<UElement>& factors) {
    UTensor out(static_cast<int>(factors.size()));
    out.add_term(Key(factors.size()), RationalFunction(1));
    // Expand factor by factor.
    for (std::size_t pos = 0; pos < factors.size(); ++pos) {
        UTensor next(out.arity_);
        for (const auto& [key, c] : out.terms_)
            for (const auto& [m, d] : factors[pos].terms()) {
                Key k = key;
                k[pos] = m;
                next.add_term(k, c * d);
            }
        out = std::move(next);
    }
    return out;
}

void UTensor::add_term(const Key& k, const RationalFunction& c) {
    if (static_cast<int>(k.size()) != arity_) throw std::invalid_argument("UTensor: key of wrong arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UTensor& UTensor::operator+=(const UTensor& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("UTensor: arity mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

UTensor& UTensor::operator-=(const UTensor& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("UTensor: arity mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

UTensor operator*(const UTensor& x, const UTensor& y) {
    if (x.arity_ != y.arity_) throw std::invalid_argument("UTensor: arity mismatch");
    const int n = x.arity_;
    UTensor out(n);
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            int sign = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j) sign += kx[static_cast<std::size_t>(i)].parity() * ky[static_cast<std::size_t>(j)].parity();
            std::vector<UElement> factors;
            factors.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                factors.push_back(UElement::monomial(kx[static_cast<std::size_t>(i)]) * UElement::monomial(ky[static_cast<std::size_t>(i)]));
            UTensor prod = UTensor::pure(factors);
            RationalFunction c = cx * cy;
            if (sign % 2 == 1) c = -c;
            for (const auto& [k, d] : prod.terms_) out.add_term(k, c * d);
        }
    }
    return out;
}

std::string UTensor::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (!c.is_one()) s += "(" + c.to_string() + ") ";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) s += " (x) ";
            s += k[i].to_string();
        }
    }
    return s;
}

namespace {

UTensor delta_generator(const UMonomial& g) {
    const UElement one(RationalFunction(1));
    if (g == UMonomial{0, 0, 1}) return UTensor::pure({UElement::E(), one}) + UTensor::pure({UElement::K(), UElement::E()});
    if (g == UMonomial{1, 0, 0}) return UTensor::pure({one, UElement::F()}) + UTensor::pure({UElement::F(), UElement::Kinv()});
    if (g == UMonomial{0, 1, 0}) return UTensor::pure({UElement::K(), UElement::K()});
    if (g == UMonomial{0, -1, 0}) return UTensor::pure({UElement::Kinv(), UElement::Kinv()});
    throw std::logic_error("delta_generator: not a generator");
}

UTensor delta_monomial(const UMonomial& m) {
    UTensor out = UTensor::pure({UElement(RationalFunction(1)), UElement(RationalFunction(1))});
    for (int k = 0; k < m.a; ++k) out = out * delta_generator({1, 0, 0});
    const UTensor dk = delta_generator({0, m.s < 0 ? -1 : 1, 0});
    for (int k = 0; k < (m.s < 0 ? -m.s : m.s); ++k) out = out * dk;
    for (int k = 0; k < m.b; ++k) out = out * delta_generator({0, 0, 1});
    return out;
}

}  // namespace

UTensor comultiply(const UElement& x) {
    UTensor out(2);
    for (const auto& [m, c] : x.terms()) {
        UTensor d = delta_monomial(m);
        for (const auto& [k, e] : d.terms()) out.add_term(k, c * e);
    }
    return out;
}

UTensor comultiply_left(const UTensor& x) {
    if (x.arity() != 2) throw std::invalid_argument("comultiply_left expects a 2-fold tensor");
    UTensor out(3);
    for (const auto& [k, c] : x.terms()) {
        UTensor d = delta_monomial(k[0]);
        for (const auto& [kk, e] : d.terms()) out.add_term({kk[0], kk[1], k[1]}, c * e);
    }
    return out;
}

UTensor comultiply_right(const UTensor& x) {
    if (x.arity() != 2) throw std::invalid_argument("comultiply_right expects a 2-fold tensor");
    UTensor out(3);
    for (const auto& [k, c] : x.terms()) {
        UTensor d = delta_monomial(k[1]);
        for (const auto& [kk, e] : d.terms()) out.add_term({k[0], kk[0], kk[1]}, c * e);
    }
    return out;
}

}  // namespace qschur
