#include <doctest.h>

#include "qschur/qnumbers.hpp"
#include "qschur/repmod.hpp"
#include "test_util.hpp"

using namespace qschur;
using namespace qschur::test;

namespace {

bool all_signs(const WeightModule& m, int sign) {
    for (const auto& l : weight_labels(m))
        if (l.sign != sign) return false;
    return true;
}

}  // namespace

TEST_CASE("Lambda_2^+ action") {
    const WeightModule m = simple_module(2, 1);
    CHECK(m.F(1, 0) == RationalFunction(1));
    CHECK(m.F(2, 1) == rf(Laurent::t(1) * qint_v(2)));
    CHECK(m.E(1, 2) == rf(Laurent::t(1)));
    CHECK(m.K(1, 1) == RationalFunction(-1));
    CHECK(m.grading == std::vector<int>{0, 1, 0});
    const auto table = action_table(m);
    CHECK(table[0] == "F xi_0 = xi_1");
    CHECK(table[1] == "F xi_1 = i*(v + v^-1) xi_2");
    CHECK(table[5] == "E xi_2 = i xi_1");
}

TEST_CASE("trivial module and the minus family") {
    const WeightModule m = simple_module(0, 1);
    CHECK(m.dim() == 1);
    CHECK(m.E(0, 0).is_zero());
    CHECK(m.F(0, 0).is_zero());
    CHECK(m.K(0, 0) == RationalFunction(1));
    CHECK(simple_module(3, -1).K(0, 0) == rf(-Laurent::v(3)));
    CHECK_THROWS(simple_module(-1, 1));
}

TEST_CASE("action matches the closed formulas") {
    for (int d = 0; d <= 8; ++d)
        for (int sign : {1, -1}) {
            const WeightModule m = simple_module(d, sign);
            for (int r = 0; r <= d; ++r) {
                if (r < d) CHECK(m.F(r + 1, r) == rf(Laurent::t(r) * qint_v(r + 1)));
                if (r > 0) CHECK(m.E(r - 1, r) == rf(Laurent(sign) * Laurent::t(r - 1) * qint_v(d + 1 - r)));
                CHECK(m.K(r, r) == rf(Laurent(sign) * Laurent::t(2 * r) * Laurent::v(d - 2 * r)));
            }
        }
}

TEST_CASE("verify_module") {
    CHECK(verify_module(simple_module(5, 1)).ok());
    WeightModule broken = simple_module(3, 1);
    broken.E.setZero();
    const RelationReport rep = verify_module(broken);
    CHECK_FALSE(rep.ok());
    CHECK(tensor(simple_module(1), simple_module(2)).dim() == 6);
    CHECK(verify_module(tensor(simple_module(1), simple_module(2))).ok());
}

TEST_CASE("simple modules d <= 8: relations, simplicity, integrality") {
    for (int d = 0; d <= 8; ++d)
        for (int sign : {1, -1}) {
            CAPTURE(d);
            CAPTURE(sign);
            const WeightModule m = simple_module(d, sign);
            CHECK(verify_module(m).ok());
            CHECK(simplicity_check(m));
            CHECK(integrality_check(m, d + 1).ok());
        }
}

TEST_CASE("F^(2) on Lambda_5 is integral with binomial entries") {
    const WeightModule m = simple_module(5);
    const MatRF f2 = divided_action(m.F, 2);
    for (int r = 0; r + 2 <= 5; ++r) {
        // t^r [r+1] t^{r+1} [r+2] / (t [2]) = t^{2r} [r+2 choose 2]
        CHECK(f2(r + 2, r) == rf(Laurent::t(2 * r) * qbinom_v(r + 2, 2)));
        CHECK(f2(r + 2, r).is_laurent());
    }
    CHECK(equal(divided_action(m.E, 0), MatRF::Identity(6, 6)));
    const WeightModule t = tensor(simple_module(2), simple_module(1));
    CHECK(integrality_check(t, 3).ok());
}

TEST_CASE("tensor action of Lambda_1 (x) Lambda_1") {
    const WeightModule t = tensor(simple_module(1), simple_module(1));
    // Basis xi_a (x) xi_b sits at index 2a + b.
    CHECK(t.E(1, 3) == RationalFunction(1));
    CHECK(t.E(2, 3) == rf(Laurent::v(-1)));
    CHECK(t.E(0, 3).is_zero());
    CHECK(t.ids[3] == "xi_1(x)xi_1");
    CHECK(t.grading == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("tensor K eigenvalues") {
    for (int d1 = 0; d1 <= 3; ++d1)
        for (int d2 = 0; d2 <= 3; ++d2) {
            const WeightModule t = tensor(simple_module(d1), simple_module(d2));
            for (int a = 0; a <= d1; ++a)
                for (int b = 0; b <= d2; ++b) {
                    const int i = a * (d2 + 1) + b;
                    CHECK(t.K(i, i) == rf(Laurent::t(2 * (a + b)) * Laurent::v(d1 + d2 - 2 * (a + b))));
                }
        }
}

TEST_CASE("tensor products: relations, unit, bracketing, generation") {
    for (int d1 = 0; d1 <= 8; ++d1)
        for (int d2 = 0; d1 + d2 <= 8; ++d2) {
            CAPTURE(d1);
            CAPTURE(d2);
            const WeightModule t = tensor(simple_module(d1), simple_module(d2));
            CHECK(verify_module(t).ok());
            VecRF top = VecRF::Zero(t.dim());
            top(0) = RationalFunction(1);
            CHECK(generated_dimension(t, top) == d1 + d2 + 1);
        }
    for (int d = 0; d <= 5; ++d) {
        const WeightModule m = simple_module(d), u = tensor(m, simple_module(0));
        CHECK(equal(u.E, m.E));
        CHECK(equal(u.F, m.F));
        CHECK(equal(u.K, m.K));
    }
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                const WeightModule A = simple_module(a), B = simple_module(b), C = simple_module(c);
                CHECK(same_module(tensor(tensor(A, B), C), tensor(A, tensor(B, C))));
            }
    CHECK(same_module(tensor_power({1, 2, 1}), tensor(tensor(simple_module(1), simple_module(2)), simple_module(1))));
}

TEST_CASE("simplicity counterexamples") {
    CHECK(simplicity_check(simple_module(6)));
    CHECK_FALSE(simplicity_check(direct_sum(simple_module(1), simple_module(1))));
    CHECK_FALSE(simplicity_check(tensor(simple_module(1), simple_module(1))));
}

TEST_CASE("weight classification") {
    const auto w1 = weight_decompose(simple_module(1, 1));
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].lambda + w1[1].lambda == 0);
    CHECK(w1[0].sign == -1);
    CHECK(w1[1].sign == -1);
    CHECK(all_signs(simple_module(3, 1), 1));
    CHECK(weight_decompose(simple_module(0, 1)).front().sign == 1);
    CHECK(weight_decompose(simple_module(0, -1)).front().sign == -1);
    CHECK(weight_decompose(simple_module(0, -1)).front().lambda == 0);
    // i^{d + p(d)} = 1 exactly when d = 0, 3 mod 4.
    for (int d = 0; d <= 12; ++d) {
        const bool plus = GaussianInt::unit(d + parity(d)).is_one();
        CHECK(all_signs(simple_module(d, 1), plus ? 1 : -1));
        CHECK(all_signs(simple_module(d, -1), plus ? -1 : 1));
        CHECK(plus == (d % 4 == 0 || d % 4 == 3));
    }
    WeightModule bad = simple_module(2);
    bad.K(0, 0) = rf(L("v + 1"));
    CHECK_THROWS_AS(weight_labels(bad), NotWeightModule);
}

TEST_CASE("idempotented round trips") {
    const WeightModule m3 = simple_module(3, 1);
    const UdotModule u3 = to_udot(m3);
    CHECK(u3.verify().ok());
    CHECK(same_module(from_udot(u3), m3));

    const WeightModule m4 = simple_module(4, 1);
    const UdotModule u4 = to_udot(m4);
    for (int r = 0; r < 4; ++r) {
        // E_{4-2r, 2-2r} is the restriction of E to xi_{r+1} -> xi_r.
        const MatRF& block = u4.E_blocks.at(2 - 2 * r);
        REQUIRE(block.rows() == 1);
        CHECK(block(0, 0) == m4.E(r, r + 1));
    }
    CHECK_THROWS_AS(to_udot(simple_module(1, 1)), NotTypePlus);
    for (int d = 0; d <= 8; ++d)
        for (int sign : {1, -1}) {
            const WeightModule m = simple_module(d, sign);
            if (all_signs(m, 1)) {
                CHECK(same_module(from_udot(to_udot(m)), m));
            } else {
                const UdotModule u = to_udot_minus(m);
                CHECK(u.verify().ok());
                CHECK(same_module(from_udot(u), m));
            }
        }
}

TEST_CASE("module JSON") {
    const Json j = module_to_json(simple_module(2));
    CHECK(j["ids"].size() == 3);
    CHECK(j["labels"][0]["lambda"] == 2);
    CHECK(j["F"].size() == 2);
}
