#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <triv/ring.hpp>

using namespace triv;

namespace {
RTriple rnd_elem(const RingPtr& R, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, int(R->q()) - 1);
    return {uint16_t(pick(rng)), uint16_t(pick(rng)), uint16_t(pick(rng))};
}
}  // namespace

TEST_CASE("ring requires odd characteristic", "[ring]") {
    CHECK_THROWS_AS(Ring::make(Field::make(2)), error);
    CHECK_NOTHROW(Ring::make(Field::make(3)));
    CHECK_NOTHROW(Ring::make(Field::make(3, 2)));
}

TEST_CASE("v-reduction products", "[ring]") {
    auto R = Ring::make(Field::make(3));
    RTriple v = {0, 1, 0}, v2 = {0, 0, 1};
    CHECK(R->mul(v, v) == v2);
    CHECK(R->mul(v2, v2) == v2);  // v^4 = v^2
    CHECK(R->mul(v, v2) == v);    // v^3 = v

    auto etas = R->idempotents();
    CHECK(R->mul(etas[1], etas[2]) == RTriple{0, 0, 0});
}

TEST_CASE("idempotent identities", "[ring]") {
    for (auto f : {Field::make(3), Field::make(5), Field::make(7), Field::make(3, 2)}) {
        auto R = Ring::make(f);
        auto e = R->idempotents();
        RTriple sum = {0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            CHECK(R->mul(e[size_t(i)], e[size_t(i)]) == e[size_t(i)]);
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(R->mul(e[size_t(i)], e[size_t(j)]) == RTriple{0, 0, 0});
            sum = R->add(sum, e[size_t(i)]);
        }
        CHECK(sum == RTriple{1, 0, 0});
    }
    // the F_3 values: 1/2 = 2
    auto R3 = Ring::make(Field::make(3));
    auto e = R3->idempotents();
    CHECK(e[0] == RTriple{1, 0, 2});
    CHECK(e[1] == RTriple{0, 2, 2});
    CHECK(e[2] == RTriple{0, 1, 2});
    CHECK(R3->to_crt(e[0]) == RTriple{1, 0, 0});
    CHECK(R3->to_crt(e[1]) == RTriple{0, 1, 0});
    CHECK(R3->to_crt(e[2]) == RTriple{0, 0, 1});
}

TEST_CASE("crt evaluations", "[ring]") {
    auto R3 = Ring::make(Field::make(3));
    CHECK(R3->to_crt({0, 0, 0}) == RTriple{0, 0, 0});
    CHECK(R3->to_crt({1, 1, 0}) == RTriple{1, 2, 0});  // 1+v at v = 0, 1, -1
    CHECK(R3->to_crt({0, 0, 1}) == RTriple{0, 1, 1});  // v^2

    CHECK(R3->from_crt({1, 0, 0}) == R3->idempotents()[0]);
    CHECK(R3->from_crt({1, 1, 1}) == RTriple{1, 0, 0});
    auto R5 = Ring::make(Field::make(5));
    CHECK(R5->from_crt({0, 1, 4}) == RTriple{0, 1, 0});  // (0, 1, -1) -> v
}

TEST_CASE("crt round trip and homomorphism", "[ring]") {
    std::mt19937 rng(7);
    for (auto f : {Field::make(3), Field::make(5), Field::make(3, 2)}) {
        auto R = Ring::make(f);
        for (int t = 0; t < 1000; ++t) {
            RTriple x = rnd_elem(R, rng), y = rnd_elem(R, rng);
            CHECK(R->from_crt(R->to_crt(x)) == x);
            auto cx = R->to_crt(x), cy = R->to_crt(y), cxy = R->to_crt(R->mul(x, y));
            for (int i = 0; i < 3; ++i)
                CHECK(cxy[size_t(i)] == f->mul(cx[size_t(i)], cy[size_t(i)]));
            // closed-form product against the CRT route (built-in cross-oracle)
            CHECK(R->mul(x, y) == R->mul_via_crt(x, y));
            CHECK(R->to_crt(R->add(x, y)) ==
                  RTriple{f->add(cx[0], cy[0]), f->add(cx[1], cy[1]), f->add(cx[2], cy[2])});
        }
    }
}

TEST_CASE("units", "[ring]") {
    auto R = Ring::make(Field::make(3));
    CHECK(R->is_unit({1, 0, 0}));
    CHECK_FALSE(R->is_unit({0, 1, 0}));
    CHECK_FALSE(R->is_unit({1, 1, 0}));  // 1+v has CRT (1, 2, 0)

    // is_unit(r) <=> some s has rs = 1 (exhaustive for q = 3)
    std::vector<RTriple> all;
    for (uint16_t a = 0; a < 3; ++a)
        for (uint16_t b = 0; b < 3; ++b)
            for (uint16_t c = 0; c < 3; ++c) all.push_back({a, b, c});
    for (const auto& x : all) {
        bool invertible = false;
        for (const auto& y : all)
            if (R->mul(x, y) == RTriple{1, 0, 0}) invertible = true;
        CHECK(invertible == R->is_unit(x));
    }
}

TEST_CASE("gray map and lee weight", "[ring]") {
    auto R = Ring::make(Field::make(3));
    CHECK(gray(*R, {{0, 0, 0}, {0, 0, 0}}) == std::vector<uint16_t>(6, 0));
    CHECK(gray(*R, {R->idempotents()[0]}) == std::vector<uint16_t>{1, 0, 0});
    // block-grouped coordinates: (phi1 block | phi2 block | phi3 block)
    CHECK(gray(*R, {{1, 1, 0}, {0, 0, 1}}) == std::vector<uint16_t>{1, 0, 2, 1, 0, 1});

    CHECK(R->lee_weight({0, 0, 0}) == 0);
    CHECK(R->lee_weight(R->idempotents()[0]) == 1);
    CHECK(R->lee_weight({1, 1, 0}) == 2);

    std::mt19937 rng(11);
    for (int t = 0; t < 1000; ++t) {
        std::vector<RTriple> x, y, sum;
        for (int i = 0; i < 4; ++i) {
            x.push_back(rnd_elem(R, rng));
            y.push_back(rnd_elem(R, rng));
            sum.push_back(R->add(x.back(), y.back()));
        }
        // additivity of the map and the weight isometry
        auto gx = gray(*R, x), gy = gray(*R, y), gs = gray(*R, sum);
        for (size_t i = 0; i < gx.size(); ++i)
            CHECK(gs[i] == R->base()->add(gx[i], gy[i]));
        int hw = 0;
        for (auto e : gx) hw += (e != 0);
        CHECK(hw == lee_weight(*R, x));
    }
}
