#pragma once

// Idempotented forms of quantum osp(1|2) and quantum sl(2).
//
// Monomials are 1_mu F^(a) E^(b) 1_lambda with mu = lambda + 2b - 2a; E raises
// the weight by 2 and F lowers it.  The two flavors differ in the commutator:
//   osp: E F 1_l - t^2 F E 1_l = t^(-l-p(l)) [l]_v 1_l, divided powers by [n]!_{v,t}
//   sl2: E F 1_l -     F E 1_l = [l]_v 1_l,              divided powers by [n]!_v

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/check.hpp"
#include "qschur/rational_function.hpp"
#include "qschur/serialize.hpp"
#include "qschur/ualg.hpp"

namespace qschur {

enum class Flavor { Osp, Sl2 };

std::string to_string(Flavor f);

struct FlavorMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UdotMonomial {
    int a = 0;       // F^(a)
    int b = 0;       // E^(b)
    int lambda = 0;  // source weight

    int mu() const noexcept { return lambda + 2 * b - 2 * a; }
    friend auto operator<=>(const UdotMonomial&, const UdotMonomial&) = default;
    /// "1_{1} F^(2) E^(1) 1_{3}"; letters with exponent 0 are omitted.
    std::string to_string() const;
};

class UdotElement {
public:
    using Terms = std::map<UdotMonomial, RationalFunction>;

    explicit UdotElement(Flavor f = Flavor::Osp) : flavor_(f) {}
    static UdotElement monomial(Flavor f, UdotMonomial m, RationalFunction c = RationalFunction(1));
    static UdotElement idempotent(Flavor f, int lambda) { return monomial(f, {0, 0, lambda}); }
    /// E_{mu,mu-2}
    static UdotElement E(Flavor f, int mu) { return monomial(f, {0, 1, mu - 2}); }
    /// F_{mu,mu+2}
    static UdotElement F(Flavor f, int mu) { return monomial(f, {1, 0, mu + 2}); }

    Flavor flavor() const noexcept { return flavor_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    RationalFunction coeff(const UdotMonomial& m) const;
    void add_term(const UdotMonomial& m, const RationalFunction& c);

    UdotElement& operator+=(const UdotElement& o);
    UdotElement& operator-=(const UdotElement& o);
    UdotElement& operator*=(const RationalFunction& c);
    friend UdotElement operator+(UdotElement a, const UdotElement& b) { return a += b; }
    friend UdotElement operator-(UdotElement a, const UdotElement& b) { return a -= b; }
    friend UdotElement operator*(UdotElement a, const RationalFunction& c) { return a *= c; }
    friend UdotElement operator*(const RationalFunction& c, UdotElement a) { return a *= c; }
    /// Throws FlavorMismatch.
    friend UdotElement operator*(const UdotElement& x, const UdotElement& y);
    friend bool operator==(const UdotElement& a, const UdotElement& b) noexcept {
        return a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const UdotElement& a, const UdotElement& b) noexcept { return !(a == b); }

    std::string to_string() const;
    Json to_json() const;
    static UdotElement from_json(const Json& j);

private:
    void same_flavor(const UdotElement& o) const;

    Flavor flavor_;
    Terms terms_;
};

/// [n] of the flavor: [n]_{v,t} for osp, [n]_v for sl2.
Laurent flavor_qint(Flavor f, int n);
Laurent flavor_qfact(Flavor f, int n);
Laurent flavor_qbinom(Flavor f, int n, int k);

/// E^(b) F^(c) 1_nu = sum_j coeffs[j] F^(c-j) E^(b-j) 1_nu.
std::vector<RationalFunction> ef_coefficients(Flavor f, int b, int c, int nu);

// ---------------------------------------------------------------------------
// Undivided words, reduced by single-step rewriting of E F adjacencies.

enum class ULetter : char { E = 'E', F = 'F' };

struct UdotWord {
    std::vector<ULetter> letters;  // product letters[0] letters[1] ... 1_lambda
    int lambda = 0;
};

UdotElement reduce_udot_word(Flavor f, const UdotWord& w, Strategy strategy);
/// Same product computed by the divided-power multiplication.
UdotElement udot_word_value(Flavor f, const UdotWord& w);
std::string udot_word_to_string(const UdotWord& w);

/// E F 1_l - t^2 F E 1_l (osp) or E F 1_l - F E 1_l (sl2), computed by the engine.
UdotElement commutator(Flavor f, int lambda);

// ---------------------------------------------------------------------------
// The isomorphism from the sl2 flavor to the osp flavor.

/// E~ 1_l -> t^{l+2+p(l)} E 1_l, F~ -> F, 1~ -> 1, extended to divided powers.
UdotElement phi(const UdotElement& x);
UdotElement phi_inv(const UdotElement& y);
/// Scalar with phi(F~^(a) E~^(b) 1~_l) = factor * F^(a) E^(b) 1_l.
RationalFunction phi_factor(const UdotMonomial& m);

/// (t^{l+p(l)} E)(t^{l-1} F) 1_l - t^2 (t^{l+1} F)(t^{l+2+p(l+2)} E) 1_l = [l]_{v,t} 1_l.
bool check_clark_wang_form(int lambda);

/// Lusztig's canonical element of the sl2 flavor with leading monomial m:
/// F^(a) E^(b) 1_l if l >= a - b, else E^(b) 1_{l-2a} F^(a).
UdotElement canonical_family_element(const UdotMonomial& m);
/// Triangular expansion of an osp element in phi(canonical family); throws
/// std::domain_error if a leading coefficient is not invertible over Z[i][v,v^-1].
std::map<UdotMonomial, RationalFunction> expand_in_family(const UdotElement& x);

/// Products of phi(canonical family) over the window, expanded in the same
/// family; every coefficient must lie in N[v, v^-1].
RelationReport positivity_probe(int lambda_min, int lambda_max, int max_degree, int jobs = 1);

}  // namespace qschur
