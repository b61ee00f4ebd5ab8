#include "qschur/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>

namespace qschur {

namespace {

std::atomic<int> g_max_degree{0};

void check_degree(int lo, int hi) {
    int cap = g_max_degree.load(std::memory_order_relaxed);
    if (cap > 0 && (hi > cap || -lo > cap))
        throw DegreeLimitExceeded("symbolic degree exceeds QSCHUR_MAX_DEGREE=" + std::to_string(cap));
}

}  // namespace

void set_max_degree(int cap) noexcept { g_max_degree.store(cap < 0 ? 0 : cap); }
int max_degree() noexcept { return g_max_degree.load(); }

Laurent Laurent::monomial(GaussianInt c, int exp) {
    Laurent p;
    if (!c.is_zero()) p.terms_.push_back({exp, std::move(c)});
    return p;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp > b.exp; });
    Laurent p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero Laurent polynomial");
    return terms_.front().exp;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero Laurent polynomial");
    return terms_.back().exp;
}

const GaussianInt& Laurent::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero Laurent polynomial");
    return terms_.front().coeff;
}

const GaussianInt& Laurent::trailing_coeff() const {
    if (terms_.empty()) throw std::domain_error("trailing_coeff of zero Laurent polynomial");
    return terms_.back().coeff;
}

GaussianInt Laurent::coeff(int exp) const {
    for (const auto& t : terms_)
        if (t.exp == exp) return t.coeff;
    return {};
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// Merge two descending term lists, b scaled by sign.
std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& a, const std::vector<Laurent::Term>& b, bool negate_b) {
    std::vector<Laurent::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp > b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp > a[i].exp) {
            out.push_back(b[j]);
            if (negate_b) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            GaussianInt c = a[i].coeff;
            if (negate_b)
                c -= b[j].coeff;
            else
                c += b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    check_degree(a.min_exp() + b.min_exp(), a.max_exp() + b.max_exp());
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coeff);
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<GaussianInt> acc(static_cast<std::size_t>(hi - lo + 1));
    GaussianInt prod;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            prod = x.coeff;
            prod *= y.coeff;
            acc[static_cast<std::size_t>(x.exp + y.exp - lo)] += prod;
        }
    }
    Laurent r;
    for (int e = hi; e >= lo; --e) {
        auto& c = acc[static_cast<std::size_t>(e - lo)];
        if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
    }
    return r;
}

bool operator<(const Laurent& a, const Laurent& b) noexcept {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a.terms_[k];
        const auto& y = b.terms_[k];
        if (x.exp != y.exp) return x.exp < y.exp;
        if (x.coeff != y.coeff) return x.coeff < y.coeff;
    }
    return a.terms_.size() < b.terms_.size();
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    if (k != 0) {
        for (auto& t : r.terms_) t.exp += k;
    }
    return r;
}

Laurent Laurent::rotated(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.coeff.rotate(k);
    return r;
}

Laurent Laurent::scaled(const GaussianInt& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    int u = c.unit_exponent();
    if (u >= 0) return rotated(u);
    Laurent r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Laurent Laurent::pow(int n) const {
    if (n < 0) throw std::domain_error("Laurent::pow with negative exponent");
    Laurent r(1), base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coeff});
    return r;
}

bool Laurent::try_exact_div(const Laurent& a, const Laurent& b, Laurent& q) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    if (a.is_zero()) {
        q = Laurent();
        return true;
    }
    if (b.terms_.size() == 1) {
        Laurent r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) {
            GaussianInt c;
            if (!GaussianInt::try_divexact(t.coeff, b.terms_[0].coeff, c)) return false;
            r.terms_.push_back({t.exp - b.terms_[0].exp, std::move(c)});
        }
        q = std::move(r);
        return true;
    }
    const int alo = a.min_exp(), ahi = a.max_exp();
    const int blo = b.min_exp(), bhi = b.max_exp();
    const int n = ahi - alo + 1, m = bhi - blo + 1;
    if (n < m) return false;
    std::vector<GaussianInt> A(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(m));
    for (const auto& t : a.terms_) A[static_cast<std::size_t>(t.exp - alo)] = t.coeff;
    for (const auto& t : b.terms_) B[static_cast<std::size_t>(t.exp - blo)] = t.coeff;
    std::vector<GaussianInt> Q(static_cast<std::size_t>(n - m + 1));
    const GaussianInt& lead = B.back();
    for (int k = n - m; k >= 0; --k) {
        auto& top = A[static_cast<std::size_t>(k + m - 1)];
        if (top.is_zero()) continue;
        GaussianInt qk;
        if (!GaussianInt::try_divexact(top, lead, qk)) return false;
        for (int j = 0; j < m; ++j) {
            const auto& bj = B[static_cast<std::size_t>(j)];
            if (!bj.is_zero()) A[static_cast<std::size_t>(k + j)] -= qk * bj;
        }
        Q[static_cast<std::size_t>(k)] = std::move(qk);
    }
    for (const auto& c : A)
        if (!c.is_zero()) return false;
    Laurent r;
    for (int k = n - m; k >= 0; --k) {
        auto& c = Q[static_cast<std::size_t>(k)];
        if (!c.is_zero()) r.terms_.push_back({k + alo - blo, std::move(c)});
    }
    q = std::move(r);
    return true;
}

Laurent Laurent::exact_div(const Laurent& a, const Laurent& b) {
    Laurent q;
    if (!try_exact_div(a, b, q)) throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
    return q;
}

Laurent Laurent::divexact_scalar(const GaussianInt& c) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.coeff = GaussianInt::divexact(t.coeff, c);
    return r;
}

GaussianInt Laurent::content() const {
    GaussianInt g;
    for (const auto& t : terms_) {
        g = GaussianInt::gcd(g, t.coeff);
        if (g.is_one()) break;
    }
    return g.normalized();
}

int Laurent::real_unit_factor() const {
    if (terms_.empty()) return -1;
    int u = terms_.front().coeff.normalizing_unit();
    // After rotating by u the leading coefficient is in the normal quadrant;
    // the polynomial is "real" if every coefficient then has zero imaginary part.
    for (const auto& t : terms_) {
        GaussianInt c = t.coeff;
        c.rotate(u);
        if (!c.im.is_zero()) return -1;
    }
    return (4 - u) % 4;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        GaussianInt c = t.coeff;
        bool negative = false;
        // Pull a leading sign out of purely real or purely imaginary coefficients.
        if ((c.im.is_zero() && c.re.sign() < 0) || (c.re.is_zero() && c.im.sign() < 0)) {
            negative = true;
            c = -c;
        }
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        std::string var;
        if (t.exp == 1)
            var = "v";
        else if (t.exp != 0)
            var = "v^" + std::to_string(t.exp);
        if (var.empty()) {
            s += c.to_string();
        } else if (c.is_one()) {
            s += var;
        } else {
            s += c.to_string() + "*" + var;
        }
    }
    return s;
}

std::string Laurent::to_factored_string() const {
    int u = real_unit_factor();
    if (u <= 0) return to_string();
    Laurent p = rotated(-u);
    const bool single = p.terms_.size() == 1;
    const std::string body = single ? p.to_string() : "(" + p.to_string() + ")";
    switch (u) {
        case 1: return "i*" + body;
        case 2: return "-" + body;
        default: return "-i*" + body;
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Laurent parse_all() {
        Laurent r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Laurent::parse: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    int small_int() {
        bool neg = eat('-');
        Integer v = integer();
        if (!v.is_small()) fail("exponent too large");
        auto x = static_cast<int>(v.small_value());
        return neg ? -x : x;
    }
    Laurent expr() {
        Laurent acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Laurent t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
    Laurent term() {
        Laurent r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    Laurent factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Laurent r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'i') {
            ++pos_;
            return Laurent::t(1);
        }
        if (c == 'v') {
            ++pos_;
            int e = 1;
            if (eat('^')) e = small_int();
            return Laurent::v(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Laurent(integer());
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace qschur
