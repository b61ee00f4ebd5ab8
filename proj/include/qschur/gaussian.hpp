#pragma once

#include <ostream>
#include <string>

#include "qschur/integer.hpp"

namespace qschur {

/// Element re + im*i of Z[i].  The imaginary unit plays the role of t (t^2 = -1).
struct GaussianInt {
    Integer re;
    Integer im;

    GaussianInt() = default;
    GaussianInt(Integer r) : re(std::move(r)) {}  // NOLINT
    GaussianInt(int r) : re(r) {}                 // NOLINT
    GaussianInt(long long r) : re(r) {}           // NOLINT
    GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    /// i^k for any integer k.
    static GaussianInt unit(int k);

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    bool is_one() const noexcept { return re.is_one() && im.is_zero(); }
    bool is_unit() const noexcept;
    /// For a unit u returns k in [0,4) with u = i^k; -1 otherwise.
    int unit_exponent() const noexcept;

    GaussianInt conj() const { return {re, -im}; }
    Integer norm() const { return re * re + im * im; }

    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o);
    /// Multiply by i^k in place (cheap rotation).
    GaussianInt& rotate(int k);

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) noexcept { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) noexcept { return !(a == b); }
    /// Lexicographic on (re, im); only used for canonical ordering.
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) noexcept {
        int c = Integer::compare(a.re, b.re);
        return c != 0 ? c < 0 : a.im < b.im;
    }

    /// Exact quotient a/b in Z[i]; returns false (and leaves q untouched) if b does not divide a.
    static bool try_divexact(const GaussianInt& a, const GaussianInt& b, GaussianInt& q);
    static GaussianInt divexact(const GaussianInt& a, const GaussianInt& b);
    static GaussianInt gcd(GaussianInt a, GaussianInt b);

    /// Unit power k such that i^k * (*this) lies in the normal half-quadrant re > 0, im >= 0.
    int normalizing_unit() const noexcept;
    GaussianInt normalized() const;

    /// "3", "-i", "2*i", "(1-2*i)".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g) { return os << g.to_string(); }
};

}  // namespace qschur
