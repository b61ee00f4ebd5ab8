#pragma once

// Quantum osp(1|2) over the fraction field, in the normal form F^a K^s E^b.
//
//   K K^-1 = K^-1 K = 1
//   K E = v^2 t^-2 E K,   K F = v^-2 t^2 F K
//   E F - t^2 F E = (K - K^-1)/(v - v^-1)
//
// E and F are odd, K is even.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qschur/rational_function.hpp"
#include "qschur/serialize.hpp"

namespace qschur {

struct UMonomial {
    int a = 0;  // power of F
    int s = 0;  // power of K (negative for K^-1)
    int b = 0;  // power of E

    int parity() const noexcept { return (a + b) % 2; }
    friend auto operator<=>(const UMonomial&, const UMonomial&) = default;
    /// "F^2 K^-1 E", "1" for the empty monomial.
    std::string to_string() const;
};

class UElement {
public:
    using Terms = std::map<UMonomial, RationalFunction>;

    UElement() = default;
    UElement(const RationalFunction& c);  // NOLINT: scalar embedding
    static UElement monomial(UMonomial m, RationalFunction c = RationalFunction(1));
    static UElement E() { return monomial({0, 0, 1}); }
    static UElement F() { return monomial({1, 0, 0}); }
    static UElement K() { return monomial({0, 1, 0}); }
    static UElement Kinv() { return monomial({0, -1, 0}); }
    /// E^n / [n]!_{v,t}
    static UElement divided_E(int n);
    static UElement divided_F(int n);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    RationalFunction coeff(const UMonomial& m) const;
    /// Parity if every term has the same parity, -1 otherwise (0 for zero).
    int parity() const;

    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement& operator*=(const RationalFunction& c);
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator-(UElement a) { return a *= RationalFunction(-1); }
    friend UElement operator*(UElement a, const RationalFunction& c) { return a *= c; }
    friend UElement operator*(const RationalFunction& c, UElement a) { return a *= c; }
    friend UElement operator*(const UElement& x, const UElement& y);
    friend bool operator==(const UElement& a, const UElement& b) noexcept { return a.terms_ == b.terms_; }
    friend bool operator!=(const UElement& a, const UElement& b) noexcept { return !(a == b); }

    UElement pow(int n) const;

    /// Right multiplication by a single generator letter.
    UElement times_E() const;
    UElement times_F() const;
    UElement times_K(int sign) const;

    void add_term(const UMonomial& m, const RationalFunction& c);

    std::string to_string() const;
    Json to_json() const;
    static UElement from_json(const Json& j);

private:
    Terms terms_;
};

/// Left-hand side minus right-hand side of the E F^(n) commutation identity.
UElement ef_divided_defect(int n);
inline bool check_ef_divided(int n) { return ef_divided_defect(n).is_zero(); }

// ---------------------------------------------------------------------------
// Independent word rewriting.

enum class Letter : char { F = 'F', K = 'K', Ki = 'k', E = 'E' };
using Word = std::vector<Letter>;

enum class Strategy { Leftmost, Rightmost };

/// Linear combination of words.
using WordSum = std::map<Word, RationalFunction>;

/// Reduces every word by repeatedly rewriting one redex chosen by the strategy:
///   E F -> t^2 F E + (K - K^-1)/(v - v^-1)
///   E K^{+-1} -> v^{-+2} t^{+-2} K^{+-1} E
///   K^{+-1} F -> v^{-+2} t^{+-2} F K^{+-1}
///   K K^-1, K^-1 K -> 1
UElement reduce_words(const WordSum& input, Strategy strategy);
UElement reduce_word(const Word& w, Strategy strategy);
std::string word_to_string(const Word& w);
/// Product of the letters computed with UElement multiplication.
UElement word_value(const Word& w);

// ---------------------------------------------------------------------------
// Super tensor powers.

class UTensor {
public:
    using Key = std::vector<UMonomial>;
    using Terms = std::map<Key, RationalFunction>;

    explicit UTensor(int arity = 2) : arity_(arity) {}
    static UTensor pure(const std::vector<UElement>& factors);

    int arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const Key& k, const RationalFunction& c);

    UTensor& operator+=(const UTensor& o);
    UTensor& operator-=(const UTensor& o);
    friend UTensor operator+(UTensor a, const UTensor& b) { return a += b; }
    friend UTensor operator-(UTensor a, const UTensor& b) { return a -= b; }
    /// (x_1 (x) ... (x) x_n)(y_1 (x) ... (x) y_n) = (-1)^{sum_{i>j} p(x_i)p(y_j)} x_1y_1 (x) ... (x) x_ny_n
    friend UTensor operator*(const UTensor& x, const UTensor& y);
    friend bool operator==(const UTensor& a, const UTensor& b) noexcept {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int arity_;
    Terms terms_;
};

UTensor comultiply(const UElement& x);
/// (Delta (x) id) and (id (x) Delta) on a 2-fold tensor.
UTensor comultiply_left(const UTensor& x);
UTensor comultiply_right(const UTensor& x);

}  // namespace qschur
