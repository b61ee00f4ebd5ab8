#include "qschur/gaussian.hpp"

#include <stdexcept>

namespace qschur {

GaussianInt GaussianInt::unit(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

bool GaussianInt::is_unit() const noexcept { return unit_exponent() >= 0; }

int GaussianInt::unit_exponent() const noexcept {
    if (im.is_zero()) {
        if (re.is_one()) return 0;
        if (re.is_minus_one()) return 2;
    } else if (re.is_zero()) {
        if (im.is_one()) return 1;
        if (im.is_minus_one()) return 3;
    }
    return -1;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
    if (im.is_zero() && o.im.is_zero()) {
        re *= o.re;
        return *this;
    }
    Integer r = re * o.re - im * o.im;
    Integer i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianInt& GaussianInt::rotate(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: break;
        case 1: {  // (a+bi)i = -b + ai
            Integer a = std::move(re);
            re = -im;
            im = std::move(a);
            break;
        }
        case 2:
            re = -re;
            im = -im;
            break;
        default: {  // (a+bi)(-i) = b - ai
            Integer a = std::move(re);
            re = std::move(im);
            im = -a;
            break;
        }
    }
    return *this;
}

bool GaussianInt::try_divexact(const GaussianInt& a, const GaussianInt& b, GaussianInt& q) {
    if (b.is_zero()) throw std::domain_error("GaussianInt division by zero");
    if (b.im.is_zero()) {
        if (!Integer::divisible(a.re, b.re) || !Integer::divisible(a.im, b.re)) return false;
        q = {Integer::divexact(a.re, b.re), Integer::divexact(a.im, b.re)};
        return true;
    }
    int u = b.unit_exponent();
    if (u >= 0) {
        q = a;
        q.rotate(-u);
        return true;
    }
    GaussianInt num = a * b.conj();
    Integer n = b.norm();
    if (!Integer::divisible(num.re, n) || !Integer::divisible(num.im, n)) return false;
    q = {Integer::divexact(num.re, n), Integer::divexact(num.im, n)};
    return true;
}

GaussianInt GaussianInt::divexact(const GaussianInt& a, const GaussianInt& b) {
    GaussianInt q;
    if (!try_divexact(a, b, q)) throw std::domain_error("GaussianInt::divexact: not divisible");
    return q;
}

namespace {

// Round x/n to the nearest integer (n > 0).
Integer round_div(const Integer& x, const Integer& n) {
    Integer q, r;
    Integer two_x = x + x + n;
    Integer two_n = n + n;
    Integer::fdiv_qr(two_x, two_n, q, r);
    return q;
}

}  // namespace

GaussianInt GaussianInt::gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt num = a * b.conj();
        Integer n = b.norm();
        GaussianInt q{round_div(num.re, n), round_div(num.im, n)};
        GaussianInt r = a - q * b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.normalized();
}

int GaussianInt::normalizing_unit() const noexcept {
    // Quadrant of the value; rotate into {re > 0, im >= 0}.
    int sr = re.sign(), si = im.sign();
    if (sr > 0 && si >= 0) return 0;
    if (sr <= 0 && si > 0) return 3;  // multiply by -i
    if (sr < 0 && si <= 0) return 2;
    if (sr >= 0 && si < 0) return 1;
    return 0;  // zero
}

GaussianInt GaussianInt::normalized() const {
    GaussianInt g = *this;
    g.rotate(normalizing_unit());
    return g;
}

std::string GaussianInt::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string ipart;
    if (im.is_one())
        ipart = "i";
    else if (im.is_minus_one())
        ipart = "-i";
    else
        ipart = im.to_string() + "*i";
    if (re.is_zero()) return ipart;
    std::string s = "(" + re.to_string();
    if (im.sign() > 0) s += "+";
    s += ipart + ")";
    return s;
}

}  // namespace qschur
