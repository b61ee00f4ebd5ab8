#include <doctest.h>

#include "qschur/bform.hpp"
#include "qschur/qnumbers.hpp"
#include "test_util.hpp"

using namespace qschur;
using namespace qschur::test;

TEST_CASE("rho on generators") {
    CHECK(rho(schur_one(3, 1)) == schur_one(3, 1));
    CHECK(rho(schur_K(3, 2)) == schur_K(3, 2));
    CHECK(rho(schur_E(2, 0)) == rf(Laurent::v(1)) * schur_F(2, 1));
    for (int d = 1; d <= 5; ++d)
        for (int r = 0; r < d; ++r) {
            CHECK(rho_E(d, r) == rf(Laurent::v(d - 2 * r - 1)) * schur_F(d, r + 1));
            CHECK(rho_F(d, r) == rf(Laurent::v(2 * r + 1 - d)) * schur_E(d, r));
            CHECK(rho(schur_E(d, r)) == rho_E(d, r));
            CHECK(rho(schur_F(d, r + 1)) == rho_F(d, r));
        }
    CHECK(rho(schur_E(2, 0) * schur_E(2, 1)) == rho(schur_E(2, 1)) * rho(schur_E(2, 0)));
}

TEST_CASE("Gram form") {
    for (int d = 0; d <= 8; ++d) {
        CAPTURE(d);
        const GramForm g = derive_gram(d);
        REQUIRE(g.diag.size() == static_cast<std::size_t>(d + 1));
        CHECK(g.diag[0] == RationalFunction(1));
        for (int r = 0; r <= d; ++r) CHECK(g.diag[r] == rf(Laurent::v(r * r - r * d) * qbinom_v(d, r)));
        CHECK(check_contravariance(g).ok());
    }
    CHECK(derive_gram(1).diag[1] == RationalFunction(1));
    CHECK(derive_gram(2).diag[1] == rf(L("1 + v^-2")));
    CHECK(derive_gram(2).to_json()["d"] == 2);
}

TEST_CASE("contravariance detects a wrong form") {
    GramForm g = derive_gram(3);
    g.diag[2] = g.diag[2] * rf(Laurent::v(1));
    CHECK_FALSE(check_contravariance(g).ok());
}

TEST_CASE("action on the simple module") {
    // E_{0,1} on Lambda_2 matches the simple module up to the embedding normalization
    const MatRF e = action_on_simple(schur_E(2, 0));
    CHECK(e(0, 1) == rf(qint_v(2)));
    const MatRF f = action_on_simple(schur_F(2, 1));
    CHECK(f(1, 0) == RationalFunction(1));
}

TEST_CASE("rho reverses products") {
    for (int d = 0; d <= 3; ++d) CHECK(check_rho_reversal(d, 3).ok());
}
