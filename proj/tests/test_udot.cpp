#include <doctest.h>

#include <random>

#include "qschur/qnumbers.hpp"
#include "qschur/schur.hpp"
#include "qschur/udot.hpp"
#include "test_util.hpp"

using namespace qschur;
using namespace qschur::test;

namespace {

constexpr Flavor kOsp = Flavor::Osp;
constexpr Flavor kSl2 = Flavor::Sl2;

UdotElement mono(Flavor f, int a, int b, int lambda) { return UdotElement::monomial(f, {a, b, lambda}); }

// Single-letter product E...F... 1_lambda built step by step.
UdotElement letters(Flavor f, const std::string& w, int lambda) {
    UdotElement out = UdotElement::idempotent(f, lambda);
    int weight = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == 'E') {
            out = UdotElement::E(f, weight + 2) * out;
            weight += 2;
        } else {
            out = UdotElement::F(f, weight - 2) * out;
            weight -= 2;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("monomial text form") {
    CHECK(UdotMonomial{2, 1, 3}.to_string() == "1_{1} F^(2) E^(1) 1_{3}");
    CHECK(UdotMonomial{2, 1, 3}.mu() == 1);
    CHECK(UdotMonomial{0, 0, 4}.to_string() == "1_{4}");
}

TEST_CASE("idempotents") {
    CHECK(UdotElement::idempotent(kOsp, 3) * UdotElement::idempotent(kOsp, 3) == UdotElement::idempotent(kOsp, 3));
    CHECK((UdotElement::idempotent(kOsp, 3) * UdotElement::idempotent(kOsp, 5)).is_zero());
    CHECK_THROWS_AS(UdotElement::idempotent(kOsp, 0) * UdotElement::idempotent(kSl2, 0), FlavorMismatch);
}

TEST_CASE("E_{3,1} F_{1,3}") {
    const UdotElement p = UdotElement::E(kOsp, 3) * UdotElement::F(kOsp, 1);
    CHECK(p == mono(kOsp, 1, 1, 3) * RationalFunction(-1) + UdotElement::idempotent(kOsp, 3) * rf(qint_v(3)));
}

TEST_CASE("idempotented commutator for |lambda| <= 20") {
    for (int l = -20; l <= 20; ++l) {
        CAPTURE(l);
        const UdotElement c = commutator(kOsp, l);
        CHECK(c == UdotElement::idempotent(kOsp, l) * rf(Laurent::t(-l - parity(l)) * qint_v(l)));
        if (l % 2 == 0) CHECK(c == UdotElement::idempotent(kOsp, l) * rf(qint_v(l) * Laurent((l / 2) % 2 ? -1 : 1)));
        CHECK(commutator(kSl2, l) == UdotElement::idempotent(kSl2, l) * rf(qint_v(l)));
    }
}

TEST_CASE("divided powers compose by binomials") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int mu = -4; mu <= 4; ++mu) {
                const UdotElement fb = mono(kOsp, b, 0, mu);
                const UdotElement fa = mono(kOsp, a, 0, mu - 2 * b);
                CHECK(fa * fb == mono(kOsp, a + b, 0, mu) * rf(qbinom_vt(a + b, a)));
            }
    // F^(2) 1_l from single steps: F F 1_l = [2]_{v,t} F^(2) 1_l
    CHECK(letters(kOsp, "FF", 1) == mono(kOsp, 2, 0, 1) * rf(qint_vt(2)));
    CHECK(letters(kSl2, "EEE", -2) == mono(kSl2, 0, 3, -2) * rf(qfact_v(3)));
}

TEST_CASE("word reduction strategies agree") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 150; ++k) {
        UdotWord w;
        w.letters.resize(rng() % 7);
        for (auto& l : w.letters) l = rng() % 2 ? ULetter::E : ULetter::F;
        w.lambda = static_cast<int>(rng() % 13) - 6;
        for (Flavor f : {kOsp, kSl2}) {
            const UdotElement a = reduce_udot_word(f, w, Strategy::Leftmost);
            CHECK(a == reduce_udot_word(f, w, Strategy::Rightmost));
            CHECK(a == udot_word_value(f, w));
        }
    }
    const UdotWord w{{ULetter::E, ULetter::F}, 3};
    CHECK(udot_word_value(kOsp, w) == letters(kOsp, "EF", 3));
}

TEST_CASE("phi on generators") {
    CHECK(phi(UdotElement::E(kSl2, 2)) == UdotElement::E(kOsp, 2) * RationalFunction(-1));
    CHECK(phi(UdotElement::F(kSl2, 0)) == UdotElement::F(kOsp, 0));
    CHECK(phi(UdotElement::idempotent(kSl2, 5)) == UdotElement::idempotent(kOsp, 5));
    for (int l = -6; l <= 6; ++l) CHECK(phi(UdotElement::E(kSl2, l + 2)) == UdotElement::E(kOsp, l + 2) * rf(Laurent::t(l + 2 + parity(l))));
}

TEST_CASE("phi is an isomorphism") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 150; ++k) {
        const UdotMonomial y{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 9) - 4};
        const UdotMonomial x{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), y.mu()};
        const UdotElement ex = UdotElement::monomial(kSl2, x), ey = UdotElement::monomial(kSl2, y);
        CHECK(phi(ex * ey) == phi(ex) * phi(ey));
        CHECK(phi_inv(phi(ex)) == ex);
        const UdotElement ox = UdotElement::monomial(kOsp, x);
        CHECK(phi(phi_inv(ox)) == ox);
    }
    for (int l = -20; l <= 20; ++l) {
        const UdotElement rel = phi(UdotElement::E(kSl2, l)) * phi(UdotElement::F(kSl2, l - 2)) -
                                phi(UdotElement::F(kSl2, l)) * phi(UdotElement::E(kSl2, l + 2)) -
                                phi(UdotElement::idempotent(kSl2, l)) * rf(qint_v(l));
        CHECK(rel.is_zero());
    }
}

TEST_CASE("rescaled generators") {
    CHECK(check_clark_wang_form(0));
    CHECK(check_clark_wang_form(3));
    CHECK(check_clark_wang_form(-5));
    for (int l = -20; l <= 20; ++l) CHECK(check_clark_wang_form(l));
}

TEST_CASE("positivity probe") {
    const UdotElement p = phi(UdotElement::F(kSl2, 0)) * phi(UdotElement::F(kSl2, 2));
    CHECK(p == phi(mono(kSl2, 2, 0, 4)) * rf(qint_v(2)));
    const auto e = expand_in_family(p);
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->second == rf(qint_v(2)));
    CHECK(canonical_family_element({1, 1, 0}) == mono(kSl2, 1, 1, 0));
    // lambda < a - b: the E-first element
    CHECK(canonical_family_element({2, 0, -4}) == mono(kSl2, 2, 0, -4));
    const UdotElement b = canonical_family_element({2, 1, -2});
    CHECK(b == UdotElement::monomial(kSl2, {0, 1, -6}) * mono(kSl2, 2, 0, -2));
    const RelationReport rep = positivity_probe(-3, 3, 2);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("JSON round trip") {
    const UdotElement x = UdotElement::E(kOsp, 3) * UdotElement::F(kOsp, 1);
    CHECK(UdotElement::from_json(x.to_json()) == x);
    CHECK(UdotElement::from_json(Json::parse(x.to_json().dump())) == x);
    CHECK(x.to_json()["flavor"] == "osp");
}
