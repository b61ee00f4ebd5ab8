#pragma once

#include <random>

#include "qschur/laurent.hpp"
#include "qschur/rational_function.hpp"

namespace qschur::test {

inline Laurent random_laurent(std::mt19937_64& rng, int max_terms = 4, int span = 4, int coeff = 5) {
    std::vector<Laurent::Term> terms;
    const int n = static_cast<int>(rng() % static_cast<unsigned>(max_terms)) + 1;
    for (int k = 0; k < n; ++k) {
        const int exp = static_cast<int>(rng() % static_cast<unsigned>(2 * span + 1)) - span;
        const long long re = static_cast<long long>(rng() % static_cast<unsigned>(2 * coeff + 1)) - coeff;
        const long long im = static_cast<long long>(rng() % static_cast<unsigned>(2 * coeff + 1)) - coeff;
        terms.push_back({exp, GaussianInt(Integer(re), Integer(im))});
    }
    return Laurent::from_terms(std::move(terms));
}

inline Laurent random_nonzero_laurent(std::mt19937_64& rng) {
    for (;;) {
        Laurent p = random_laurent(rng);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction rf(const Laurent& p) { return RationalFunction(p); }
inline Laurent L(const char* text) { return Laurent::parse(text); }

}  // namespace qschur::test
