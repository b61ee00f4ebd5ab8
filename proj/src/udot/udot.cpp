#include "qschur/udot.hpp"

#include <optional>
#include <tuple>

#include "qschur/parallel.hpp"
#include "qschur/qnumbers.hpp"
#include "qschur/schur.hpp"

namespace qschur {

namespace {

RationalFunction rf(const Laurent& p) { return RationalFunction(p); }

// omega(l) = t^(-l-p(l)) for osp, 1 for sl2.
Laurent omega(Flavor f, int lambda) { return f == Flavor::Osp ? Laurent::t(-lambda - parity(lambda)) : Laurent(1); }
// Coefficient of F E in the commutator: t^2 for osp, 1 for sl2.
Laurent swap_factor(Flavor f, int k) { return f == Flavor::Osp ? Laurent::t(2 * k) : Laurent(1); }

std::string letter_power(const char* g, int n) { return std::string(g) + "^(" + std::to_string(n) + ")"; }

using EfKey = std::tuple<int, int, int, int>;

}  // namespace

std::string to_string(Flavor f) { return f == Flavor::Osp ? "osp" : "sl2"; }

std::string UdotMonomial::to_string() const {
    std::string s = "1_{" + std::to_string(mu()) + "}";
    if (a > 0) s += " " + letter_power("F", a);
    if (b > 0) s += " " + letter_power("E", b);
    if (a > 0 || b > 0) s += " 1_{" + std::to_string(lambda) + "}";
    return s;
}

Laurent flavor_qint(Flavor f, int n) { return f == Flavor::Osp ? qint_vt(n) : qint_v(n); }
Laurent flavor_qfact(Flavor f, int n) { return f == Flavor::Osp ? qfact_vt(n) : qfact_v(n); }
Laurent flavor_qbinom(Flavor f, int n, int k) { return f == Flavor::Osp ? qbinom_vt(n, k) : qbinom_v(n, k); }

UdotElement UdotElement::monomial(Flavor f, UdotMonomial m, RationalFunction c) {
    if (m.a < 0 || m.b < 0) throw std::domain_error("UdotMonomial with a negative exponent");
    UdotElement x(f);
    x.add_term(m, c);
    return x;
}

RationalFunction UdotElement::coeff(const UdotMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void UdotElement::add_term(const UdotMonomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void UdotElement::same_flavor(const UdotElement& o) const {
    if (o.flavor_ != flavor_) throw FlavorMismatch("cannot combine " + qschur::to_string(flavor_) + " and " + qschur::to_string(o.flavor_) + " elements");
}

UdotElement& UdotElement::operator+=(const UdotElement& o) {
    same_flavor(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UdotElement& UdotElement::operator-=(const UdotElement& o) {
    same_flavor(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UdotElement& UdotElement::operator*=(const RationalFunction& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

std::vector<RationalFunction> ef_coefficients(Flavor f, int b, int c, int nu) {
    if (b < 0 || c < 0) throw std::domain_error("ef_coefficients needs nonnegative exponents");
    thread_local std::map<EfKey, std::vector<RationalFunction>> memo;
    const EfKey key{static_cast<int>(f), b, c, nu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<RationalFunction> out(static_cast<std::size_t>(std::min(b, c) + 1));
    if (b == 0 || c == 0) {
        out[0] = RationalFunction(1);
    } else {
        // E^(b) F^(c) = E E^(b-1) F^(c) / [b], then one step of
        //   E F^(n) 1_w = s^n F^(n) E 1_w + omega(w) s^(n-1) ([n]_v / [n]) [w-n+1]_v F^(n-1) 1_w.
        const auto prev = ef_coefficients(f, b - 1, c, nu);
        const RationalFunction inv_b = RationalFunction(1) / rf(flavor_qint(f, b));
        for (std::size_t j = 0; j < prev.size(); ++j) {
            if (prev[j].is_zero()) continue;
            const int n = c - static_cast<int>(j);
            const int e = b - 1 - static_cast<int>(j);
            const int w = nu + 2 * e;
            // F^(n) E E^(e) = [e+1] F^(n) E^(e+1)
            out[j] += prev[j] * rf(swap_factor(f, n) * flavor_qint(f, e + 1)) * inv_b;
            if (n > 0) {
                Laurent ratio = f == Flavor::Osp ? Laurent::t(1 - n) : Laurent(1);
                const Laurent step = omega(f, w) * swap_factor(f, n - 1) * ratio * qint_v(w - n + 1);
                out[j + 1] += prev[j] * rf(step) * inv_b;
            }
        }
    }
    memo.emplace(key, out);
    return out;
}

UdotElement operator*(const UdotElement& x, const UdotElement& y) {
    x.same_flavor(y);
    const Flavor f = x.flavor_;
    UdotElement out(f);
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            if (mx.lambda != my.mu()) continue;
            // F^(a) [E^(b) F^(c) 1_nu] E^(e) 1_l with nu = l + 2e.
            const int nu = my.lambda + 2 * my.b;
            const auto coeffs = ef_coefficients(f, mx.b, my.a, nu);
            const RationalFunction c0 = cx * cy;
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                if (coeffs[j].is_zero()) continue;
                const int fa = my.a - static_cast<int>(j), eb = mx.b - static_cast<int>(j);
                const Laurent merge = flavor_qbinom(f, mx.a + fa, mx.a) * flavor_qbinom(f, eb + my.b, my.b);
                out.add_term({mx.a + fa, eb + my.b, my.lambda}, c0 * coeffs[j] * rf(merge));
            }
        }
    return out;
}

std::string UdotElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + c.to_string() + ") ";
        s += m.to_string();
    }
    return s;
}

Json UdotElement::to_json() const {
    Json terms = Json::array();
    for (const auto& [m, c] : terms_)
        terms.push_back(Json{{"mu", m.mu()}, {"lambda", m.lambda}, {"F", m.a}, {"E", m.b}, {"coeff", qschur::to_json(c)}});
    return Json{{"flavor", qschur::to_string(flavor_)}, {"terms", terms}};
}

UdotElement UdotElement::from_json(const Json& j) {
    const std::string fl = j.at("flavor").get<std::string>();
    if (fl != "osp" && fl != "sl2") throw std::invalid_argument("unknown flavor " + fl);
    UdotElement x(fl == "osp" ? Flavor::Osp : Flavor::Sl2);
    for (const auto& t : j.at("terms")) {
        const UdotMonomial m{t.at("F").get<int>(), t.at("E").get<int>(), t.at("lambda").get<int>()};
        if (t.contains("mu") && t.at("mu").get<int>() != m.mu()) throw std::invalid_argument("inconsistent weights in " + m.to_string());
        x.add_term(m, rational_from_json(t.at("coeff")));
    }
    return x;
}

// ---------------------------------------------------------------------------

namespace {

using UWord = std::vector<ULetter>;

// Weight to the right of letter i.
int weight_after(const UWord& w, std::size_t i, int lambda) {
    int x = lambda;
    for (std::size_t k = w.size(); k-- > i + 1;) x += w[k] == ULetter::E ? 2 : -2;
    return x;
}

std::optional<std::size_t> find_ef(const UWord& w, Strategy strategy) {
    if (w.size() < 2) return std::nullopt;
    if (strategy == Strategy::Leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == ULetter::E && w[i + 1] == ULetter::F) return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (w[i] == ULetter::E && w[i + 1] == ULetter::F) return i;
    }
    return std::nullopt;
}

}  // namespace

UdotElement reduce_udot_word(Flavor f, const UdotWord& word, Strategy strategy) {
    std::map<UWord, RationalFunction> active{{word.letters, RationalFunction(1)}};
    auto accumulate = [&active](UWord w, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = active.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) active.erase(it);
        }
    };
    UdotElement out(f);
    while (!active.empty()) {
        auto node = active.extract(active.begin());
        const UWord& w = node.key();
        const RationalFunction& c = node.mapped();
        const auto pos = find_ef(w, strategy);
        if (!pos) {
            int a = 0, b = 0;
            for (ULetter l : w) (l == ULetter::F ? a : b)++;
            // F^a E^b = [a]! [b]! F^(a) E^(b)
            out.add_term({a, b, word.lambda}, c * rf(flavor_qfact(f, a) * flavor_qfact(f, b)));
            continue;
        }
        const std::size_t i = *pos;
        const int nu = weight_after(w, i + 1, word.lambda);
        UWord swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        accumulate(std::move(swapped), c * rf(swap_factor(f, 1)));
        UWord shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        accumulate(std::move(shorter), c * rf(omega(f, nu) * qint_v(nu)));
    }
    return out;
}

UdotElement udot_word_value(Flavor f, const UdotWord& w) {
    UdotElement x = UdotElement::idempotent(f, w.lambda);
    for (std::size_t k = w.letters.size(); k-- > 0;) {
        const int src = weight_after(w.letters, k, w.lambda);
        x = (w.letters[k] == ULetter::E ? UdotElement::E(f, src + 2) : UdotElement::F(f, src - 2)) * x;
    }
    return x;
}

std::string udot_word_to_string(const UdotWord& w) {
    std::string s;
    for (ULetter l : w.letters) s += l == ULetter::E ? "E " : "F ";
    return s + "1_{" + std::to_string(w.lambda) + "}";
}

UdotElement commutator(Flavor f, int lambda) {
    const UdotElement ef = UdotElement::E(f, lambda) * UdotElement::F(f, lambda - 2);
    const UdotElement fe = UdotElement::F(f, lambda) * UdotElement::E(f, lambda + 2);
    return ef - fe * rf(swap_factor(f, 1));
}

// ---------------------------------------------------------------------------

RationalFunction phi_factor(const UdotMonomial& m) {
    // F~^(a) -> t^{a(a-1)/2} F^(a); each E~ step into weight w carries t^{w+p(w)}.
    int e = m.a * (m.a - 1) / 2 + m.b * (m.b - 1) / 2;
    for (int k = 1; k <= m.b; ++k) e += m.lambda + 2 * k + parity(m.lambda);
    return rf(Laurent::t(e));
}

UdotElement phi(const UdotElement& x) {
    if (x.flavor() != Flavor::Sl2) throw FlavorMismatch("phi expects an sl2 element");
    UdotElement out(Flavor::Osp);
    for (const auto& [m, c] : x.terms()) out.add_term(m, c * phi_factor(m));
    return out;
}

UdotElement phi_inv(const UdotElement& y) {
    if (y.flavor() != Flavor::Osp) throw FlavorMismatch("phi_inv expects an osp element");
    UdotElement out(Flavor::Sl2);
    for (const auto& [m, c] : y.terms()) out.add_term(m, c * phi_factor(m).inverse());
    return out;
}

bool check_clark_wang_form(int lambda) {
    const Flavor f = Flavor::Osp;
    const UdotElement e1 = UdotElement::E(f, lambda) * rf(Laurent::t(lambda + parity(lambda)));
    const UdotElement f1 = UdotElement::F(f, lambda - 2) * rf(Laurent::t(lambda - 1));
    const UdotElement f2 = UdotElement::F(f, lambda) * rf(Laurent::t(lambda + 1));
    const UdotElement e2 = UdotElement::E(f, lambda + 2) * rf(Laurent::t(lambda + 2 + parity(lambda + 2)));
    const UdotElement lhs = e1 * f1 - f2 * e2 * rf(Laurent::t(2));
    return lhs == UdotElement::idempotent(f, lambda) * rf(qint_vt(lambda));
}

UdotElement canonical_family_element(const UdotMonomial& m) {
    const Flavor f = Flavor::Sl2;
    if (m.lambda >= m.a - m.b) return UdotElement::monomial(f, m);
    return UdotElement::monomial(f, {0, m.b, m.lambda - 2 * m.a}) * UdotElement::monomial(f, {m.a, 0, m.lambda});
}

std::map<UdotMonomial, RationalFunction> expand_in_family(const UdotElement& x) {
    if (x.flavor() != Flavor::Osp) throw FlavorMismatch("expand_in_family expects an osp element");
    std::map<UdotMonomial, RationalFunction> out;
    UdotElement rest = x;
    while (!rest.is_zero()) {
        // Highest a + b first; ties broken by the monomial order.
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (it->first.a + it->first.b > lead->first.a + lead->first.b) lead = it;
        const UdotMonomial m = lead->first;
        const UdotElement member = phi(canonical_family_element(m));
        const RationalFunction u = member.coeff(m);
        if (!u.is_laurent() || !u.num().is_unit())
            throw std::domain_error("family element for " + m.to_string() + " has non-unit leading coefficient " + u.to_string());
        const RationalFunction c = lead->second / u;
        out.emplace(m, c);
        rest -= member * c;
    }
    return out;
}

RelationReport positivity_probe(int lambda_min, int lambda_max, int max_degree, int jobs) {
    std::vector<UdotMonomial> family;
    for (int l = lambda_min; l <= lambda_max; ++l)
        for (int a = 0; a <= max_degree; ++a)
            for (int b = 0; b <= max_degree; ++b) family.push_back({a, b, l});
    std::vector<std::pair<UdotMonomial, UdotMonomial>> pairs;
    for (const auto& x : family)
        for (const auto& y : family)
            if (x.lambda == y.mu()) pairs.emplace_back(x, y);
    auto results = parallel_map(pairs.size(), jobs, [&](std::size_t i) {
        const auto& [mx, my] = pairs[i];
        const UdotElement prod = phi(canonical_family_element(mx)) * phi(canonical_family_element(my));
        std::vector<std::string> bad;
        for (const auto& [m, c] : expand_in_family(prod))
            if (unit_positive_exponent(c) != 0)
                bad.push_back("phi(b[" + mx.to_string() + "]) phi(b[" + my.to_string() + "]) has coefficient " + c.to_string() +
                              " on phi(b[" + m.to_string() + "])");
        return bad;
    });
    RelationReport rep;
    for (const auto& bad : results) {
        rep.checked += 1;
        rep.failures.insert(rep.failures.end(), bad.begin(), bad.end());
    }
    return rep;
}

}  // namespace qschur
