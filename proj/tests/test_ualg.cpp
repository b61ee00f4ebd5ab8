#include <doctest.h>

#include <random>

#include "qschur/qnumbers.hpp"
#include "qschur/ualg.hpp"
#include "test_util.hpp"

using namespace qschur;
using namespace qschur::test;

namespace {

const UElement kOne(RationalFunction(1));

RationalFunction h() { return RationalFunction(1) / rf(L("v - v^-1")); }

Word random_word(std::mt19937_64& rng, int max_len) {
    static constexpr Letter letters[] = {Letter::E, Letter::F, Letter::K, Letter::Ki};
    Word w(rng() % static_cast<unsigned>(max_len + 1));
    for (auto& l : w) l = letters[rng() % 4];
    return w;
}

}  // namespace

TEST_CASE("E F in normal form") {
    const UElement ef = UElement::E() * UElement::F();
    CHECK(ef.terms().size() == 3);
    CHECK(ef.coeff({1, 0, 1}) == RationalFunction(-1));
    CHECK(ef.coeff({0, 1, 0}) == h());
    CHECK(ef.coeff({0, -1, 0}) == -h());
}

TEST_CASE("K E and E K") {
    // K E is already normal; E K is rewritten with the factor v^-2 t^2.
    const UElement ke = UElement::K() * UElement::E();
    CHECK(ke == UElement::monomial({0, 1, 1}));
    const UElement ek = UElement::E() * UElement::K();
    CHECK(ek == UElement::monomial({0, 1, 1}, rf(-Laurent::v(-2))));
    CHECK(ke == rf(Laurent::v(2) * Laurent::t(-2)) * ek);
    CHECK(UElement::K() * UElement::F() == rf(Laurent::v(-2) * Laurent::t(2)) * (UElement::F() * UElement::K()));
}

TEST_CASE("K K^-1 = 1") {
    CHECK(UElement::K() * UElement::Kinv() == kOne);
    CHECK(UElement::Kinv() * UElement::K() == kOne);
}

TEST_CASE("divided powers") {
    CHECK(UElement::divided_F(0) == kOne);
    CHECK(UElement::divided_F(2) == UElement::F().pow(2) * (RationalFunction(1) / rf(Laurent::t(1) * qint_v(2))));
    // F^(2) F^(3) = F^5 / ([2]! [3]!) must equal [5 2]_{v,t} F^(5).
    const UElement lhs = UElement::divided_F(2) * UElement::divided_F(3);
    const UElement brute = UElement::F().pow(5) * (RationalFunction(1) / rf(qfact_vt(2) * qfact_vt(3)));
    CHECK(lhs == brute);
    CHECK(lhs == rf(qbinom_vt(5, 2)) * UElement::divided_F(5));
    CHECK(UElement::divided_E(3) * UElement::divided_E(1) == rf(qint_vt(4)) * UElement::divided_E(4));
}

TEST_CASE("E F^(n) commutation") {
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(check_ef_divided(n));
        // Right-hand side assembled here from the printed formula.
        const UElement kpart = (UElement::K() * rf(Laurent::v(1 - n)) - UElement::Kinv() * rf(Laurent::v(n - 1))) * h();
        const UElement rhs = rf(Laurent::t(2 * n)) * (UElement::divided_F(n) * UElement::E()) +
                             rf(Laurent::t(n - 1)) * (UElement::divided_F(n - 1) * kpart);
        CHECK(UElement::E() * UElement::divided_F(n) == rhs);
    }
}

TEST_CASE("rewriting strategies agree with multiplication") {
    const Word w{Letter::E, Letter::E, Letter::K, Letter::F, Letter::Ki, Letter::F, Letter::E, Letter::F};
    CHECK(reduce_word(w, Strategy::Leftmost) == reduce_word(w, Strategy::Rightmost));
    CHECK(reduce_word(w, Strategy::Leftmost) == word_value(w));
    CHECK(word_to_string(w) == "E E K F K^-1 F E F");
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        const Word x = random_word(rng, 8);
        CAPTURE(word_to_string(x));
        const UElement a = reduce_word(x, Strategy::Leftmost);
        CHECK(a == reduce_word(x, Strategy::Rightmost));
        CHECK(a == word_value(x));
    }
}

TEST_CASE("associativity and parity on random monomials") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const UElement x = word_value(random_word(rng, 4)), y = word_value(random_word(rng, 4)),
                       z = word_value(random_word(rng, 4));
        CHECK((x * y) * z == x * (y * z));
        if (!(x * y).is_zero()) CHECK((x * y).parity() == (x.parity() + y.parity()) % 2);
    }
}

TEST_CASE("comultiplication") {
    const UTensor dE = comultiply(UElement::E());
    CHECK(dE == UTensor::pure({UElement::E(), kOne}) + UTensor::pure({UElement::K(), UElement::E()}));
    CHECK(comultiply(UElement::K()) == UTensor::pure({UElement::K(), UElement::K()}));
    CHECK(comultiply(UElement::F()) == UTensor::pure({kOne, UElement::F()}) + UTensor::pure({UElement::F(), UElement::Kinv()}));
    // Super sign: (1 (x) E)(F (x) 1) = t^2 F (x) E.
    const UTensor sw = UTensor::pure({kOne, UElement::E()}) * UTensor::pure({UElement::F(), kOne});
    CHECK(sw == UTensor::pure({-UElement::F(), UElement::E()}));
    CHECK(UTensor::pure({UElement::E(), kOne}) * UTensor::pure({kOne, UElement::F()}) ==
          UTensor::pure({UElement::E(), UElement::F()}));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
        const UElement x = word_value(random_word(rng, 3)), y = word_value(random_word(rng, 3));
        CHECK(comultiply(x * y) == comultiply(x) * comultiply(y));
    }
    for (const UElement& g : {UElement::E(), UElement::F(), UElement::K(), UElement::Kinv()})
        CHECK(comultiply_left(comultiply(g)) == comultiply_right(comultiply(g)));
}

TEST_CASE("UElement text and JSON") {
    CHECK(UMonomial{2, -1, 1}.to_string() == "F^2 K^-1 E");
    CHECK(UMonomial{}.to_string() == "1");
    const UElement x = UElement::E() * UElement::F() * UElement::K();
    CHECK(UElement::from_json(x.to_json()) == x);
    CHECK(UElement::from_json(Json::parse(x.to_json().dump())) == x);
}
