#include "qschur/integer.hpp"

#include <limits>
#include <stdexcept>

namespace qschur {

namespace {

mpz_class from_i64(std::int64_t v) {
    mpz_class r;
    // mpz has no direct int64 setter on every platform; long is 64-bit on LP64.
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
    r = static_cast<long>(v);
    return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) : small_(0) { assign_mpz(mpz_class(v)); }

Integer::Integer(const std::string& decimal) : small_(0) {
    mpz_class v;
    if (v.set_str(decimal, 10) != 0) throw std::invalid_argument("Integer: bad decimal literal '" + decimal + "'");
    assign_mpz(std::move(v));
}

Integer& Integer::operator=(const Integer& o) {
    if (this != &o) {
        small_ = o.small_;
        big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
}

void Integer::assign_mpz(mpz_class&& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(std::move(v));
    }
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_i64(small_); }

int Integer::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(static_cast<long long>(-small_));
    Integer r;
    r.assign_mpz(-to_mpz());
    return r;
}

Integer& Integer::operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign_mpz(to_mpz() + o.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign_mpz(to_mpz() - o.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign_mpz(to_mpz() * o.to_mpz());
    return *this;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    // Normalized storage: a big value never fits in int64, so mixed is unequal.
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
}

int Integer::compare(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
    return cmp(a.to_mpz(), b.to_mpz());
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("Integer::divexact by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1))
        return Integer(static_cast<long long>(a.small_ / b.small_));
    mpz_class q;
    mpz_class am = a.to_mpz(), bm = b.to_mpz();
    mpz_divexact(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
    Integer r;
    r.assign_mpz(std::move(q));
    return r;
}

void Integer::fdiv_qr(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    if (b.is_zero()) throw std::domain_error("Integer::fdiv_qr by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
        std::int64_t qq = a.small_ / b.small_;
        std::int64_t rr = a.small_ % b.small_;
        if (rr != 0 && ((rr < 0) != (b.small_ < 0))) {
            qq -= 1;
            rr += b.small_;
        }
        q = Integer(static_cast<long long>(qq));
        r = Integer(static_cast<long long>(rr));
        return;
    }
    mpz_class qm, rm, am = a.to_mpz(), bm = b.to_mpz();
    mpz_fdiv_qr(qm.get_mpz_t(), rm.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
    q.assign_mpz(std::move(qm));
    r.assign_mpz(std::move(rm));
}

bool Integer::divisible(const Integer& a, const Integer& b) {
    if (b.is_zero()) return a.is_zero();
    if (!a.big_ && !b.big_) {
        if (b.small_ == -1) return true;
        return a.small_ % b.small_ == 0;
    }
    mpz_class am = a.to_mpz(), bm = b.to_mpz();
    return mpz_divisible_p(am.get_mpz_t(), bm.get_mpz_t()) != 0;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
        b.small_ != std::numeric_limits<std::int64_t>::min()) {
        std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
        std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
        while (y != 0) {
            std::int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(static_cast<long long>(x));
    }
    mpz_class g, am = a.to_mpz(), bm = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
    Integer r;
    r.assign_mpz(std::move(g));
    return r;
}

std::string Integer::to_string() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

}  // namespace qschur
