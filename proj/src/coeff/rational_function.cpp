#include "qschur/rational_function.hpp"

#include <algorithm>

namespace qschur {

namespace {

using Poly = std::vector<GaussianInt>;  // coefficient of v^k at index k

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Drops any power of v dividing p.
Poly to_poly(const Laurent& p) {
    Poly out;
    if (p.is_zero()) return out;
    const int lo = p.min_exp();
    out.resize(static_cast<std::size_t>(p.max_exp() - lo + 1));
    for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exp - lo)] = t.coeff;
    return out;
}

Laurent from_poly(const Poly& p) {
    std::vector<Laurent::Term> terms;
    for (int k = degree(p); k >= 0; --k)
        if (!p[static_cast<std::size_t>(k)].is_zero()) terms.push_back({k, p[static_cast<std::size_t>(k)]});
    return Laurent::from_terms(std::move(terms));
}

GaussianInt content(const Poly& p) {
    GaussianInt g;
    for (const auto& c : p) {
        g = GaussianInt::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

void divide_scalar(Poly& p, const GaussianInt& c) {
    if (c.is_one()) return;
    for (auto& x : p) x = GaussianInt::divexact(x, c);
}

void multiply_scalar(Poly& p, const GaussianInt& c) {
    if (c.is_one()) return;
    for (auto& x : p) x *= c;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
Poly pseudo_remainder(Poly a, const Poly& b) {
    const int n = degree(b);
    const GaussianInt& lc = b.back();
    int e = degree(a) - n + 1;
    while (!a.empty() && degree(a) >= n) {
        GaussianInt coef = a.back();
        const int shift = degree(a) - n;
        multiply_scalar(a, lc);
        for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(j + shift)] -= coef * b[static_cast<std::size_t>(j)];
        trim(a);
        --e;
    }
    for (; e > 0; --e) multiply_scalar(a, lc);
    return a;
}

GaussianInt gauss_pow(const GaussianInt& x, int n) {
    GaussianInt r(1);
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

// Primitive part of gcd(a, b) by the subresultant PRS.  Both inputs nonzero.
Poly primitive_gcd(Poly a, Poly b) {
    if (degree(a) < degree(b)) std::swap(a, b);
    divide_scalar(a, content(a));
    divide_scalar(b, content(b));
    GaussianInt g(1), h(1);
    for (;;) {
        const int delta = degree(a) - degree(b);
        Poly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (degree(r) == 0) return Poly{GaussianInt(1)};
        a = std::move(b);
        divide_scalar(r, g * gauss_pow(h, delta));
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = GaussianInt::divexact(gauss_pow(g, delta), gauss_pow(h, delta - 1));
        }
    }
    divide_scalar(b, content(b));
    return b;
}

}  // namespace

Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const Laurent& x = a.is_zero() ? b : a;
        Poly p = to_poly(x);
        GaussianInt u = GaussianInt::unit(p.back().normalizing_unit());
        multiply_scalar(p, u);
        return from_poly(p);
    }
    Poly pa = to_poly(a), pb = to_poly(b);
    GaussianInt c = GaussianInt::gcd(content(pa), content(pb));
    Poly g = primitive_gcd(std::move(pa), std::move(pb));
    multiply_scalar(g, c);
    multiply_scalar(g, GaussianInt::unit(g.back().normalizing_unit()));
    return from_poly(g);
}

RationalFunction::RationalFunction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    if (den_.is_one()) return;
    const int shift = den_.min_exp();
    if (shift != 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    if (!den_.is_monomial()) {
        Poly g = primitive_gcd(to_poly(num_), to_poly(den_));
        if (degree(g) > 0) {
            Laurent gl = from_poly(g);
            num_ = Laurent::exact_div(num_, gl);
            den_ = Laurent::exact_div(den_, gl);
        }
    }
    GaussianInt c = GaussianInt::gcd(num_.content(), den_.content());
    if (!c.is_one()) {
        num_ = num_.divexact_scalar(c);
        den_ = den_.divexact_scalar(c);
    }
    const int u = den_.leading_coeff().normalizing_unit();
    if (u != 0) {
        num_ = num_.rotated(u);
        den_ = den_.rotated(u);
    }
}

const Laurent& RationalFunction::to_laurent() const {
    if (!den_.is_one()) throw NotDivisible("value " + to_string() + " is not a Laurent polynomial");
    return num_;
}

RationalFunction RationalFunction::operator-() const { return {Raw{}, -num_, den_}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return {den_, num_};
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    if (den_.is_one()) return {Raw{}, num_.pow(n), den_};
    return {num_.pow(n), den_.pow(n)};
}

RationalFunction RationalFunction::bar() const {
    if (den_.is_one()) return {Raw{}, num_.bar(), den_};
    return {num_.bar(), den_.bar()};
}

RationalFunction RationalFunction::rotated(int k) const { return {Raw{}, num_.rotated(k), den_}; }

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::parse(std::string_view text) {
    // Split at a top-level '/', if any.
    int depth = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) return {Laurent::parse(text.substr(0, k)), Laurent::parse(text.substr(k + 1))};
    }
    return {Laurent::parse(text)};
}

}  // namespace qschur
