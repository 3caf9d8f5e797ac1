#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <triv/gf.hpp>

using namespace triv;

TEST_CASE("field construction", "[gf]") {
    auto f3 = Field::make(3);
    CHECK(f3->q() == 3);
    CHECK(f3->r() == 1);

    auto f9 = Field::make(3, 2, {1, 0, 1});  // x^2 + 1, no root mod 3
    CHECK(f9->q() == 9);

    // x^2 + 1 has the root 2 mod 5
    CHECK_THROWS_MATCHES(Field::make(5, 2, {1, 0, 1}), error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("ReducibleModulus")));
    CHECK_THROWS_MATCHES(Field::make(6), error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("NonPrimeCharacteristic")));
    CHECK_THROWS_MATCHES(Field::make(3, 3), error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("MissingModulus")));

    // bundled defaults exist for q in {9, 25, 49} and validate on load
    CHECK(Field::make(3, 2)->q() == 9);
    CHECK(Field::make(5, 2)->q() == 25);
    CHECK(Field::make(7, 2)->q() == 49);

    // deterministic modulus search for other extensions
    auto f27 = Field::make_auto(3, 3);
    CHECK(f27->q() == 27);
    auto f16 = Field::make_auto(2, 4);
    CHECK(f16->q() == 16);
}

TEST_CASE("element arithmetic", "[gf]") {
    auto f5 = Field::make(5);
    CHECK(f5->inv(2) == 3);
    CHECK_THROWS_AS(f5->inv(0), error);

    auto f9 = Field::make(3, 2, {1, 0, 1});
    uint16_t x = 3;  // the class of x: coefficients (0, 1)
    CHECK(f9->mul(x, x) == 2);  // x^2 = -1 = 2

    FieldElem a{f5, 4}, b{f5, 3};
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 2);
    CHECK((a / b).value() == 3);
    CHECK((-a).value() == 1);

    FieldElem c{Field::make(7), 1};
    CHECK_THROWS_AS(a + c, error);
}

TEST_CASE("field axioms on random elements", "[gf]") {
    std::mt19937 rng(42);
    for (auto f : {Field::make(7), Field::make(3, 2), Field::make(5, 2)}) {
        std::uniform_int_distribution<int> pick(0, int(f->q()) - 1);
        for (int t = 0; t < 1000; ++t) {
            uint16_t a = uint16_t(pick(rng)), b = uint16_t(pick(rng)), c = uint16_t(pick(rng));
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
        for (long long v = 1; v < f->q(); ++v) {
            CHECK(f->mul(uint16_t(v), f->inv(uint16_t(v))) == 1);
            CHECK(f->pow(uint16_t(v), f->q() - 1) == 1);
        }
        // Frobenius fixes every element
        for (long long v = 0; v < f->q(); ++v) CHECK(f->pow(uint16_t(v), f->q()) == v);
    }
}

TEST_CASE("quadratic character", "[gf]") {
    auto f5 = Field::make(5);
    CHECK(quadratic_character({f5, 0}) == 0);
    CHECK(quadratic_character({f5, 2}) == -1);  // squares mod 5 are {0, 1, 4}
    CHECK(quadratic_character({f5, 4}) == 1);

    for (auto f : {Field::make(3), Field::make(5), Field::make(7), Field::make(3, 2),
                   Field::make(5, 2)}) {
        CHECK(f->character(1) == 1);
        int plus = 0;
        for (long long v = 1; v < f->q(); ++v)
            if (f->character(uint16_t(v)) == 1) ++plus;
        CHECK(plus == (f->q() - 1) / 2);
        // multiplicative on nonzero elements
        for (long long a = 1; a < f->q(); ++a)
            for (long long b = 1; b < f->q(); ++b)
                CHECK(f->character(f->mul(uint16_t(a), uint16_t(b))) ==
                      f->character(uint16_t(a)) * f->character(uint16_t(b)));
    }
    CHECK_THROWS_AS(Field::make(2)->character(1), error);
}

TEST_CASE("element of given order", "[gf]") {
    auto f5 = Field::make(5);
    CHECK(element_of_order(f5, 4).value() == 2);
    CHECK(element_of_order(f5, 1).value() == 1);
    CHECK_THROWS_AS(element_of_order(f5, 3), error);  // 3 does not divide 4

    auto f25 = Field::make(5, 2);
    auto x = element_of_order(f25, 6);
    CHECK(x.pow(6).value() == 1);
    CHECK(x.pow(2).value() != 1);
    CHECK(x.pow(3).value() != 1);
}

TEST_CASE("spec strings", "[gf]") {
    CHECK(Field::make(3)->spec_string() == "3");
    CHECK(Field::make(3, 2, {1, 0, 1})->spec_string() == "3^2:1,0,1");
}
