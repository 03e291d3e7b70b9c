#include <catch2/catch_amalgamated.hpp>

#include "ffspec/field.hpp"
#include "ffspec/tower.hpp"

using namespace ffspec;

TEST_CASE("deterministic field construction") {
    FieldCtx F3 = build_field(3, 1);
    CHECK(F3.q() == 3);
    CHECK(F3.generator() == 2);
    CHECK(F3.record() == "field p=3 m=1 modulus=0,1 generator=2");

    FieldCtx F9 = build_field(3, 2);
    CHECK(F9.q() == 9);
    CHECK(F9.record() == "field p=3 m=2 modulus=1,0,1 generator=4");
    // generator has order exactly 8
    CHECK(F9.pow(F9.generator(), 8) == 1);
    for (int i = 1; i < 8; ++i) CHECK(F9.pow(F9.generator(), i) != 1);

    FieldCtx F7 = build_field(7, 1);
    CHECK(F7.generator() == 3);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(build_field(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_field(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_field(15, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_field(3, 0), std::invalid_argument);
    // q^2 above the cap
    CHECK_THROWS_AS(build_field(3, 9), std::invalid_argument);
    CHECK_NOTHROW(build_field(3, 2, 100));
    CHECK_THROWS_AS(build_field(3, 2, 80), std::invalid_argument);
}

TEST_CASE("table invariants") {
    for (auto [p, m] : {std::pair<long long, int>{3, 2}, {7, 1}, {5, 2}, {3, 4}}) {
        FieldCtx F = build_field(p, m);
        long long q = F.q();
        CHECK(F.exp_of(0) == 1);
        CHECK(F.exp_of((q - 1) / 2) == F.minus_one());
        for (long long i = 0; i < q - 1; ++i) CHECK(F.log_of(F.exp_of(i)) == i);
    }
}

TEST_CASE("field arithmetic obeys the axioms") {
    FieldCtx F = build_field(7, 1);
    CHECK(F.pow(3, 6) == 1);  // Fermat
    for (long long x = 0; x < F.q(); ++x) {
        CHECK(F.mul(x, 1) == x);
        CHECK(F.add(x, F.neg(x)) == 0);
        if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
    }
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK_THROWS_AS(F.div(3, 0), std::domain_error);
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.pow(3, -1) == F.inv(3));

    FieldCtx F9 = build_field(3, 2);
    for (long long x = 0; x < 9; ++x)
        for (long long y = 0; y < 9; ++y) {
            CHECK(F9.add(x, y) == F9.add(y, x));
            CHECK(F9.mul(x, y) == F9.mul(y, x));
            CHECK(F9.mul(x, F9.add(y, 1)) == F9.add(F9.mul(x, y), x));
        }
}

TEST_CASE("bound elements detect context mismatch") {
    FieldCtx F7 = build_field(7, 1);
    FieldCtx F9 = build_field(3, 2);
    Felt a(F7, 3), b(F7, 5), c(F9, 4);
    CHECK((a * b).v == F7.mul(3, 5));
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("quadratic character and roots") {
    FieldCtx F7 = build_field(7, 1);
    CHECK(F7.eta(3) == QuadClass::NonSquare);  // squares mod 7 are {1,2,4}
    CHECK(F7.eta(2) == QuadClass::Square);
    CHECK(F7.eta(0) == QuadClass::Zero);
    long long sq = 0, ns = 0;
    for (long long x = 1; x < 7; ++x) {
        (F7.eta(x) == QuadClass::Square ? sq : ns)++;
        for (long long y = 1; y < 7; ++y)
            CHECK(F7.eta_value(F7.mul(x, y)) == F7.eta_value(x) * F7.eta_value(y));
        CHECK(F7.eta(F7.mul(x, x)) == QuadClass::Square);
    }
    CHECK(sq == 3);
    CHECK(ns == 3);

    auto [r, nr] = F7.sqrt(2);
    CHECK(F7.mul(r, r) == 2);
    CHECK(nr == F7.neg(r));
    CHECK_THROWS_AS(F7.sqrt(3), std::domain_error);
    CHECK(F7.sqrt(0) == std::pair<long long, long long>{0, 0});
}

TEST_CASE("cube roots") {
    FieldCtx F9 = build_field(3, 2);
    // Frobenius inverse: exactly one cube root everywhere at p = 3
    for (long long x = 0; x < 9; ++x) {
        auto roots = F9.cube_roots(x);
        REQUIRE(roots.size() == 1);
        CHECK(F9.pow(roots[0], 3) == x);
    }
    FieldCtx F7 = build_field(7, 1);  // 3 | q - 1: zero or three roots
    long long with_roots = 0;
    for (long long x = 1; x < 7; ++x) {
        auto roots = F7.cube_roots(x);
        CHECK((roots.size() == 0 || roots.size() == 3));
        if (!roots.empty()) ++with_roots;
        for (long long r : roots) CHECK(F7.pow(r, 3) == x);
    }
    CHECK(with_roots == 2);  // cubes mod 7: {1, 6}
}

TEST_CASE("absolute trace") {
    FieldCtx F7 = build_field(7, 1);
    for (long long x = 0; x < 7; ++x) CHECK(F7.tr_abs(x) == x);
    FieldCtx F9 = build_field(3, 2);
    for (long long x = 0; x < 9; ++x) {
        long long expect = F9.add(x, F9.pow(x, 3));
        CHECK(F9.tr_abs(x) == expect);
    }
    // trace is F_p-linear and surjective
    long long hits[3] = {0, 0, 0};
    for (long long x = 0; x < 9; ++x) ++hits[F9.tr_abs(x)];
    CHECK(hits[0] == 3);
    CHECK(hits[1] == 3);
    CHECK(hits[2] == 3);
}

TEST_CASE("cyclotomic numbers match the closed forms") {
    FieldCtx F9 = build_field(3, 2);
    CHECK(cyclotomic_number(F9, 0, 0) == 1);
    CHECK(cyclotomic_number(F9, 0, 1) == 2);
    CHECK(cyclotomic_number(F9, 1, 0) == 2);
    CHECK(cyclotomic_number(F9, 1, 1) == 2);

    FieldCtx F7 = build_field(7, 1);
    CHECK(cyclotomic_number(F7, 0, 1) == 2);
    CHECK(cyclotomic_number(F7, 0, 0) == 1);
    CHECK(cyclotomic_number(F7, 1, 0) == 1);
    CHECK(cyclotomic_number(F7, 1, 1) == 1);

    for (long long p : {7, 11, 13}) {
        FieldCtx F = build_field(p, 1);
        long long total = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                long long n = cyclotomic_number(F, i, j);
                CHECK(n == cyclotomic_closed_form(p, i, j));
                total += n;
            }
        CHECK(total == p - 2);  // every x != 0, -1 lands in exactly one cell
    }
}

TEST_CASE("tower construction and alpha policies") {
    FieldCtx F5 = build_field(5, 1);
    TowerCtx T5(F5, AlphaPolicy::ForceMinus3);
    CHECK(T5.alpha() == 2);  // -3 = 2 mod 5, a non-square

    FieldCtx F7 = build_field(7, 1);
    CHECK_THROWS_AS(TowerCtx(F7, AlphaPolicy::ForceMinus3), std::invalid_argument);

    FieldCtx F3 = build_field(3, 1);
    TowerCtx T3(F3);
    CHECK(T3.alpha() == 2);

    CHECK_THROWS_AS(TowerCtx(F7, AlphaPolicy::Explicit, 2), std::invalid_argument);  // 2 is a square mod 7
    CHECK_NOTHROW(TowerCtx(F7, AlphaPolicy::Explicit, 3));
}

TEST_CASE("tower invariants") {
    for (auto [p, m] : {std::pair<long long, int>{3, 2}, {7, 1}, {5, 1}, {3, 3}}) {
        FieldCtx F = build_field(p, m);
        TowerCtx T(F);
        long long q = T.q();
        CHECK(F.eta(T.alpha()) == QuadClass::NonSquare);
        CHECK(T.frob(T.zeta()) == T.neg(T.zeta()));  // Z^q = -Z
        CHECK(T.eta(T.lambda()) == QuadClass::NonSquare);
        if (q % 4 == 1)
            CHECK(T.frob(T.lambda()) == T.neg(T.lambda()));
        else
            CHECK(T.pow(T.lambda(), q + 1) == T.minus_one());
        // embedding is a ring homomorphism, Frobenius fixes exactly its image
        for (long long a = 0; a < q; ++a) {
            for (long long b = 0; b < q; ++b) {
                CHECK(T.add(T.embed(a), T.embed(b)) == T.embed(F.add(a, b)));
                CHECK(T.mul(T.embed(a), T.embed(b)) == T.embed(F.mul(a, b)));
            }
        }
        for (long long x = 0; x < T.size(); ++x) {
            CHECK((T.frob(x) == x) == (T.d_of(x) == 0));
            CHECK(T.frob(T.frob(x)) == x);  // x^{q^2} = x
            long long tr = T.trace_rel(x), nm = T.norm_rel(x);
            CHECK(T.embed(tr) == T.add(x, T.frob(x)));
            if (x != 0) CHECK(T.embed(nm) == T.pow(x, q + 1));
            CHECK((nm == 0) == (x == 0));
        }
    }
}

TEST_CASE("pair formulas agree with the top tables") {
    FieldCtx F9 = build_field(3, 2);
    TowerCtx T(F9);
    for (long long x = 0; x < T.size(); ++x)
        for (long long y = 0; y < T.size(); ++y) CHECK(T.mul(x, y) == T.mul_formula(x, y));
    for (long long x = 1; x < T.size(); ++x) CHECK(T.pow(x, 37) == T.pow_formula(x, 37));
}

TEST_CASE("unit circle decomposition") {
    FieldCtx F9 = build_field(3, 2);
    TowerCtx T(F9);
    long long q = T.q();
    auto [p1, p2] = T.unit_circle_decompose(1);
    CHECK(p1 == std::pair<long long, long long>{1, 1});
    CHECK(p2.first == F9.neg(1));
    CHECK(p2.second == T.neg(1));

    auto circle = T.unit_circle();
    CHECK(circle.size() == static_cast<size_t>(q + 1));
    for (long long z : circle) CHECK(T.pow(z, q + 1) == 1);

    for (long long x = 1; x < T.size(); ++x) {
        if (T.eta(x) != QuadClass::Square) {
            CHECK_THROWS_AS(T.unit_circle_decompose(x), std::domain_error);
            continue;
        }
        auto [a, b] = T.unit_circle_decompose(x);
        // exhaustive search finds exactly the two returned pairs
        long long found = 0;
        for (long long y = 1; y < q; ++y)
            for (long long z : circle)
                if (T.mul(T.embed(y), z) == x) {
                    ++found;
                    bool matches = (y == a.first && z == a.second) || (y == b.first && z == b.second);
                    CHECK(matches);
                }
        CHECK(found == 2);
    }
    CHECK_THROWS_AS(T.unit_circle_decompose(0), std::domain_error);
}

TEST_CASE("unit circle decomposition at q = 27") {
    TowerCtx T(build_field(3, 3));
    long long q = T.q();
    for (long long x = 1; x < T.size(); ++x) {
        if (T.eta(x) != QuadClass::Square) continue;
        auto [a, b] = T.unit_circle_decompose(x);
        for (auto& pr : {a, b}) {
            CHECK(T.mul(T.embed(pr.first), pr.second) == x);
            CHECK(T.frob(T.embed(pr.first)) == T.embed(pr.first));
            CHECK(T.pow(pr.second, q + 1) == 1);
        }
        CHECK(b.first == T.base().neg(a.first));
        CHECK(b.second == T.neg(a.second));
    }
}

TEST_CASE("enumeration cap override via the environment") {
    setenv("FFSPEC_ENUM_CAP", "100", 1);
    CHECK(default_enum_cap() == 100);
    CHECK_NOTHROW(build_field(3, 2));
    CHECK_THROWS_AS(build_field(3, 3), std::invalid_argument);
    unsetenv("FFSPEC_ENUM_CAP");
    CHECK(default_enum_cap() == (1LL << 24));
    CHECK_NOTHROW(build_field(3, 3));
}

TEST_CASE("context records round-trip through rebuild") {
    FieldCtx F = build_field(3, 3);
    FieldCtx F2 = build_field(3, 3);
    CHECK(F.record() == F2.record());
    TowerCtx T(F), T2(F2);
    CHECK(T.record() == T2.record());
}
