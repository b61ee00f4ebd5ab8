#pragma once

// Fraction field of Z[i][v, v^-1], kept in a canonical reduced form so that
// equality is structural.
//
// Canonical form of num/den:
//   * den is an honest polynomial in v with nonzero constant term,
//   * gcd(num, den) = 1 in Z[i][v, v^-1],
//   * the Gaussian contents of num and den are jointly coprime,
//   * the leading coefficient of den lies in {re > 0, im >= 0}.
// Zero is 0/1.

#include <ostream>
#include <string>

#include "qschur/laurent.hpp"

namespace qschur {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}            // NOLINT
    RationalFunction(long long c) : num_(c), den_(1) {}      // NOLINT
    RationalFunction(GaussianInt c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RationalFunction(Laurent p) : num_(std::move(p)), den_(1) {}      // NOLINT
    RationalFunction(Laurent num, Laurent den);

    const Laurent& num() const noexcept { return num_; }
    const Laurent& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in Z[i][v, v^-1].
    bool is_laurent() const noexcept { return den_.is_one(); }
    /// Throws NotDivisible if the value has a genuine denominator.
    const Laurent& to_laurent() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) noexcept { return !(a == b); }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) noexcept {
        return a.den_ == b.den_ ? a.num_ < b.num_ : a.den_ < b.den_;
    }

    RationalFunction inverse() const;
    RationalFunction pow(int n) const;
    RationalFunction bar() const;
    /// Multiply by i^k.
    RationalFunction rotated(int k) const;

    /// Term count of num and den; used as pivot cost in elimination.
    std::size_t complexity() const noexcept { return num_.size() + den_.size(); }

    /// "v + v^-1" for Laurent values, "(num)/(den)" otherwise.
    std::string to_string() const;
    /// Accepts "p" or "(p)/(q)" with p, q in Laurent syntax.
    static RationalFunction parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.to_string(); }

private:
    struct Raw {};
    RationalFunction(Raw, Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Laurent num_;
    Laurent den_;
};

/// Normalized gcd in Z[i][v, v^-1] (a polynomial with nonzero constant term and
/// leading coefficient in the normal quadrant; 0 iff both inputs are 0).
Laurent gcd(const Laurent& a, const Laurent& b);

}  // namespace qschur
