#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ffspec/cyclic_code.hpp"

using namespace ffspec;

TEST_CASE("minimal polynomials over F_3") {
    FieldCtx F3 = build_field(3, 1);
    TowerCtx T(build_field(3, 1));  // F_9 over F_3
    // e = 1: orbit {1}, polynomial x - 1
    PolyFq p1 = minimal_polynomial(T, 1, F3);
    CHECK(p1 == PolyFq(F3, {2, 1}));
    // a primitive element of F_9 has degree-2 minimal polynomial
    PolyFq pg = minimal_polynomial(T, T.generator(), F3);
    CHECK(pg.deg() == 2);
    CHECK(pg.eval(0) != 0);

    // m = 2: the (q+2)-nd power of the generator still generates a degree-4 orbit
    TowerCtx T2(build_field(3, 2));
    PolyFq p2 = minimal_polynomial(T2, T2.inv(T2.pow(T2.generator(), T2.q() + 2)), F3);
    CHECK(p2.deg() == 4);
}

TEST_CASE("code parameters") {
    CodeSpec c1(1);
    CHECK(c1.n == 8);
    CHECK(c1.k == 4);
    CHECK(c1.min_weight == 2);
    CHECK(c1.parity.deg() == 4);

    CodeSpec c2(2);
    CHECK(c2.n == 80);
    CHECK(c2.k == 8);
    CHECK(c2.min_weight == 42);

    CodeSpec c3(3);
    CHECK(c3.n == 728);
    CHECK(c3.k == 12);
    CHECK(c3.min_weight == 450);
}

TEST_CASE("codeword weights by both engines") {
    CodeSpec code(2);
    long long q = code.tower.q();
    CHECK(codeword_weight(code, 0, 0, WeightEngine::Direct) == 0);
    CHECK(codeword_weight(code, 0, 0, WeightEngine::ViaWalsh) == 0);
    for (long long b = 1; b < 10; ++b) {
        CHECK(codeword_weight(code, 0, b, WeightEngine::Direct) == 2 * q * q / 3);
        CHECK(codeword_weight(code, 0, b, WeightEngine::ViaWalsh) == 2 * q * q / 3);
    }
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> pick(0, code.tower.size() - 1);
    for (int i = 0; i < 100; ++i) {
        long long a = pick(rng), b = pick(rng);
        CHECK(codeword_weight(code, a, b, WeightEngine::Direct) ==
              codeword_weight(code, a, b, WeightEngine::ViaWalsh));
    }
}

TEST_CASE("weight distributions") {
    CodeSpec c1(1);
    WeightDistribution direct = weight_distribution(c1, WeightEngine::Direct);
    WeightDistribution walsh = weight_distribution(c1, WeightEngine::ViaWalsh);
    std::map<long long, long long> expect = {{0, 1}, {2, 8}, {4, 24}, {6, 32}, {8, 16}};
    CHECK(direct.counts == expect);
    CHECK(walsh.counts == expect);
    CHECK(closed_form_weight_distribution(3).counts == expect);

    CodeSpec c2(2);
    WeightDistribution d2 = weight_distribution(c2, WeightEngine::ViaWalsh, 2);
    std::map<long long, long long> expect2 = {{0, 1}, {42, 960}, {48, 720}, {54, 2960}, {60, 1920}};
    CHECK(d2.counts == expect2);
    CHECK(weight_distribution(c2, WeightEngine::Direct, 2).counts == expect2);
    CHECK(d2.total() == 6561);

    // first moment of a code with balanced coordinates: sum w = n * (2/3) * 3^{4m}
    long long wsum = 0;
    for (auto& [w, c] : d2.counts) wsum += w * c;
    CHECK(wsum == c2.n * 2 * 6561 / 3);
}

TEST_CASE("membership and cyclic shifts") {
    CodeSpec code(2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> pick(0, code.tower.size() - 1);
    for (int i = 0; i < 100; ++i) {
        auto w = codeword(code, pick(rng), pick(rng));
        CHECK(is_codeword(code, w));
        CHECK(is_codeword(code, cyclic_shift(w)));
    }
    // a vector off the code fails the parity check
    auto w = codeword(code, 1, 0);
    w[0] = (w[0] + 1) % 3;
    CHECK_FALSE(is_codeword(code, w));
}

TEST_CASE("construction rejects other characteristics") {
    TowerCtx T7(build_field(7, 1));
    FieldCtx F3 = build_field(3, 1);
    CHECK_THROWS_AS(minimal_polynomial(T7, 1, F3), std::invalid_argument);
}
