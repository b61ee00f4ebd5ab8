#include "qschur/qnumbers.hpp"

#include <stdexcept>
#include <string>

namespace qschur {

namespace {

void check_binom(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("quantum binomial needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void check_fact(int n) {
    if (n < 0) throw std::domain_error("quantum factorial needs n >= 0, got " + std::to_string(n));
}

}  // namespace

Laurent qint_v(int n) {
    // v^(n-1) + v^(n-3) + ... + v^(1-n), negated for n < 0.
    if (n == 0) return {};
    const int m = n < 0 ? -n : n;
    std::vector<Laurent::Term> terms;
    for (int j = 0; j < m; ++j) terms.push_back({m - 1 - 2 * j, GaussianInt(n < 0 ? -1 : 1)});
    return Laurent::from_terms(std::move(terms));
}

Laurent qfact_v(int n) {
    check_fact(n);
    Laurent r(1);
    for (int k = 2; k <= n; ++k) r = r * qint_v(k);
    return r;
}

Laurent qbinom_v(int n, int k) {
    check_binom(n, k);
    return Laurent::exact_div(qfact_v(n), qfact_v(k) * qfact_v(n - k));
}

Laurent qint_vt(int n) {
    // (vt)^n - (v t^-1)^-n  over  vt - (v t^-1)^-1
    const Laurent vt = Laurent::v(1) * Laurent::t(1);
    const Laurent vti_inv = Laurent::v(-1) * Laurent::t(1);  // (v t^-1)^-1 = v^-1 t
    auto power = [](const Laurent& x, int e) {
        if (e >= 0) return x.pow(e);
        // x is a unit monomial here
        const auto& term = x.terms().front();
        return Laurent::monomial(GaussianInt::unit(-term.coeff.unit_exponent()), -term.exp).pow(-e);
    };
    Laurent num = power(vt, n) - power(vti_inv, n);
    Laurent den = vt - vti_inv;
    return Laurent::exact_div(num, den);
}

Laurent qfact_vt(int n) {
    check_fact(n);
    Laurent r(1);
    for (int k = 2; k <= n; ++k) r = r * qint_vt(k);
    return r;
}

Laurent qbinom_vt(int n, int k) {
    check_binom(n, k);
    return Laurent::exact_div(qfact_vt(n), qfact_vt(k) * qfact_vt(n - k));
}

Laurent qint_vt_closed(int n) { return qint_v(n).rotated(n - 1); }

Laurent qfact_vt_closed(int n) {
    check_fact(n);
    return qfact_v(n).rotated(n * (n - 1) / 2);
}

Laurent qbinom_vt_closed(int n, int k) {
    check_binom(n, k);
    return qbinom_v(n, k).rotated(k * (n - k));
}

Laurent twist(int m, int two_n) { return Laurent::monomial(GaussianInt::unit(two_n - m), m); }

}  // namespace qschur
