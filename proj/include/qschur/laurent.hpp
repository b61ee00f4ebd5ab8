#pragma once

// Laurent polynomials over the Gaussian integers, Z[i][v, v^-1].
//
// This is the coefficient ring of every structure in the library: t is the
// imaginary unit, so t-powers are units of Z[i] and never a separate variable.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qschur/gaussian.hpp"

namespace qschur {

/// Raised when an exact division has a nonzero remainder.
struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a product exceeds the configured symbolic degree cap.
struct DegreeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Process-wide cap on |exponent| of any product (0 = unlimited).  Read from
/// QSCHUR_MAX_DEGREE by the CLI.
void set_max_degree(int cap) noexcept;
int max_degree() noexcept;

class Laurent {
public:
    struct Term {
        int exp;
        GaussianInt coeff;
        friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
    };

    Laurent() = default;
    Laurent(int c) : Laurent(GaussianInt(c)) {}                  // NOLINT
    Laurent(long long c) : Laurent(GaussianInt(c)) {}            // NOLINT
    Laurent(const Integer& c) : Laurent(GaussianInt(c)) {}       // NOLINT
    Laurent(GaussianInt c) {                                     // NOLINT
        if (!c.is_zero()) terms_.push_back({0, std::move(c)});
    }

    static Laurent monomial(GaussianInt c, int exp);
    /// v^k
    static Laurent v(int k = 1) { return monomial(GaussianInt(1), k); }
    /// i^k, the decategorified t^k.
    static Laurent t(int k) { return monomial(GaussianInt::unit(k), 0); }
    /// Terms given in any order; duplicates are summed, zeros dropped.
    static Laurent from_terms(std::vector<Term> terms);

    /// Terms in strictly decreasing exponent order.
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff.is_one(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// u * v^k with u a unit of Z[i].
    bool is_unit() const noexcept { return is_monomial() && terms_[0].coeff.is_unit(); }
    bool is_constant() const noexcept { return is_zero() || (is_monomial() && terms_[0].exp == 0); }
    int max_exp() const;
    int min_exp() const;
    const GaussianInt& leading_coeff() const;   // at max_exp
    const GaussianInt& trailing_coeff() const;  // at min_exp
    GaussianInt coeff(int exp) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) noexcept { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) noexcept { return !(a == b); }
    /// Canonical total order (exponent-major); used for map keys and pivot ties.
    friend bool operator<(const Laurent& a, const Laurent& b) noexcept;

    /// Multiply by v^k.
    Laurent shifted(int k) const;
    /// Multiply by i^k.
    Laurent rotated(int k) const;
    Laurent scaled(const GaussianInt& c) const;
    Laurent pow(int n) const;

    /// v -> v^-1, i fixed.
    Laurent bar() const;

    /// q with q*b == a; throws NotDivisible otherwise.
    static Laurent exact_div(const Laurent& a, const Laurent& b);
    static bool try_exact_div(const Laurent& a, const Laurent& b, Laurent& q);
    /// Divide every coefficient by c exactly.
    Laurent divexact_scalar(const GaussianInt& c) const;

    /// Normalized gcd of the coefficients (0 for the zero polynomial).
    GaussianInt content() const;

    /// If *this == u * p with u in {1,i,-1,-i} and p in Z[v,v^-1] with positive
    /// leading coefficient, returns the exponent of u; otherwise -1.
    int real_unit_factor() const;

    /// Canonical rendering, e.g. "v^2 + 1 + v^-2", "i*v - 2*i*v^-1", "0".
    std::string to_string() const;
    /// Unit-factored rendering, e.g. "-(v^2 + 1 + v^-2)"; falls back to to_string().
    std::string to_factored_string() const;
    /// Accepts the canonical rendering and general sums/products of integers,
    /// i, v^k and parenthesized subexpressions.
    static Laurent parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

    /// Total number of stored terms; a cheap complexity measure for pivoting.
    std::size_t size() const noexcept { return terms_.size(); }

private:
    std::vector<Term> terms_;
};

}  // namespace qschur
