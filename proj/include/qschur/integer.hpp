#pragma once

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in int64_t never touch the heap; anything that overflows
// is promoted to a GMP integer and demoted again as soon as it fits.  The
// structure-constant scans spend almost all of their time on small values,
// so the fast path matters far more than the bignum path.

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qschur {

class Integer {
public:
    Integer() noexcept : small_(0) {}
    Integer(long long v) noexcept : small_(v) {}  // NOLINT: implicit by design of numeric literals
    Integer(int v) noexcept : small_(v) {}        // NOLINT
    explicit Integer(const mpz_class& v);
    explicit Integer(const std::string& decimal);

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o);
    Integer& operator=(Integer&&) noexcept = default;

    bool is_small() const noexcept { return !big_; }
    /// Only meaningful when is_small().
    std::int64_t small_value() const noexcept { return small_; }
    mpz_class to_mpz() const;

    int sign() const noexcept;
    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }
    bool is_minus_one() const noexcept { return !big_ && small_ == -1; }

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend bool operator!=(const Integer& a, const Integer& b) noexcept { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) noexcept { return compare(a, b) < 0; }
    friend bool operator>(const Integer& a, const Integer& b) noexcept { return compare(a, b) > 0; }
    friend bool operator<=(const Integer& a, const Integer& b) noexcept { return compare(a, b) <= 0; }
    friend bool operator>=(const Integer& a, const Integer& b) noexcept { return compare(a, b) >= 0; }
    static int compare(const Integer& a, const Integer& b) noexcept;

    /// Exact quotient; the caller guarantees b | a.
    static Integer divexact(const Integer& a, const Integer& b);
    /// Floor division and remainder with 0 <= r < |b| when b > 0.
    static void fdiv_qr(const Integer& a, const Integer& b, Integer& q, Integer& r);
    static bool divisible(const Integer& a, const Integer& b);
    static Integer gcd(const Integer& a, const Integer& b);
    Integer abs() const { return sign() < 0 ? -*this : *this; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

private:
    void assign_mpz(mpz_class&& v);

    std::int64_t small_;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace qschur
