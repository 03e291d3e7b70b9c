#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ffspec/walsh.hpp"

using namespace ffspec;

namespace {
TowerCtx make_tower(long long p, int m) { return TowerCtx(build_field(p, m)); }
}  // namespace

TEST_CASE("cyclotomic integer ring") {
    // 1 + xi + xi^2 = 0 in canonical form
    CycInt z = CycInt::root_power(3, 0) + CycInt::root_power(3, 1) + CycInt::root_power(3, 2);
    CHECK(z.is_zero());
    // xi^3 = 1
    CHECK(CycInt::root_power(3, 1) * CycInt::root_power(3, 2) == CycInt::integer(3, 1));
    // |xi^k| = 1
    for (int k = 0; k < 3; ++k) CHECK(CycInt::root_power(3, k).norm_squared() == CycInt::integer(3, 1));
    // (1 + xi)(1 + xi^2) = 1 + xi + xi^2 + 1 = 1
    CycInt a = CycInt::integer(3, 1) + CycInt::root_power(3, 1);
    CHECK(a * a.conj() == CycInt::integer(3, 1));
    CHECK(a.norm_squared().rational_value() == 1);
    CHECK_FALSE(a.is_rational());
    CHECK(CycInt::integer(3, -5).is_rational());
    CHECK(CycInt::integer(3, -5).galois_trace() == -10);  // degree p-1 over the rationals
    // Galois trace of xi is -1
    CHECK(CycInt::root_power(5, 1).galois_trace() == -1);
    CHECK_THROWS_AS(CycInt::root_power(3, 1).rational_value(), std::domain_error);
    CHECK_THROWS_AS(CycInt(3) + CycInt(5), std::invalid_argument);
}

TEST_CASE("single Walsh values at q = 9") {
    TowerCtx T = make_tower(3, 2);
    PowerMap f(T);
    // W(0, b) = sum over x of xi^{Tr(b f(x))}
    for (long long b = 1; b < 10; ++b) {
        std::vector<long long> hist(3, 0);
        for (long long x = 0; x < T.size(); ++x) ++hist[T.tr_abs(T.mul(b, f.eval(x)))];
        CHECK(walsh_at(f, 0, b) == CycInt::from_histogram(hist));
    }
    // all values in {-q, 0, q, 2q}
    for (long long a = 0; a < T.size(); ++a)
        for (long long b = 1; b < T.size(); b += 7) {
            CycInt w = walsh_at(f, a, b);
            REQUIRE(w.is_rational());
            long long v = w.rational_value();
            bool in_set = v == -9 || v == 0 || v == 9 || v == 18;
            CHECK(in_set);
        }
}

TEST_CASE("distribution engines and closed form") {
    TowerCtx T3 = make_tower(3, 1);
    PowerMap f3(T3);
    WalshDistribution direct = walsh_distribution(f3, WalshEngine::Direct);
    WalshDistribution fast = walsh_distribution(f3, WalshEngine::GroupTransform);
    CHECK(direct == fast);
    WalshDistribution closed = closed_form_walsh_distribution(T3);
    CHECK(fast == closed);
    CHECK(fast.counts.at(CycInt::integer(3, -3)) == 16);
    CHECK(fast.counts.at(CycInt::integer(3, 0)) == 24);
    CHECK(fast.counts.at(CycInt::integer(3, 3)) == 24);
    CHECK(fast.counts.at(CycInt::integer(3, 6)) == 8);
    CHECK(fast.total() == 9 * 8);

    TowerCtx T9 = make_tower(3, 2);
    PowerMap f9(T9);
    WalshDistribution d9 = walsh_distribution(f9, WalshEngine::GroupTransform, 2);
    CHECK(d9 == walsh_distribution(f9, WalshEngine::Direct));
    CHECK(d9 == closed_form_walsh_distribution(T9));
    CHECK(d9.counts.at(CycInt::integer(3, -9)) == 1920);
    CHECK(d9.counts.at(CycInt::integer(3, 0)) == 2880);
    CHECK(d9.counts.at(CycInt::integer(3, 9)) == 720);
    CHECK(d9.counts.at(CycInt::integer(3, 18)) == 960);

    // the transform engine indexes single values correctly
    WalshColumnEngine eng(f9);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> pick(0, T9.size() - 1);
    for (int i = 0; i < 25; ++i) {
        long long a = pick(rng), b = 1 + pick(rng) % (T9.size() - 1);
        auto buf = eng.column(b);
        CHECK(eng.value_of(buf, a) == walsh_at(f9, a, b));
    }
}

TEST_CASE("distribution engines agree beyond characteristic 3") {
    TowerCtx T5 = make_tower(5, 1);
    PowerMap f(T5);
    WalshDistribution direct = walsh_distribution(f, WalshEngine::Direct);
    WalshDistribution fast = walsh_distribution(f, WalshEngine::GroupTransform);
    CHECK(direct == fast);
    CHECK(fast.total() == 25 * 24);
    MomentReport mom = moment_checks(f);
    CHECK(mom.sum_ok);
    CHECK(mom.parseval_ok);
    // sampled conjugate-orbit bound
    for (long long a = 0; a < 5; ++a)
        for (long long b = 1; b < 5; ++b)
            CHECK(walsh_at(f, a, b).norm_squared().galois_trace() <= 4 * 25 * 25);
}

TEST_CASE("moment identities at characteristic 3") {
    TowerCtx T3 = make_tower(3, 1);
    MomentReport m3 = moment_checks(PowerMap(T3));
    CHECK(m3.sum_ok);
    CHECK(m3.parseval_ok);
    CHECK(m3.cube_ok);
    CHECK(m3.cube_value == 144);  // 9 * 8 * 2

    TowerCtx T9 = make_tower(3, 2);
    MomentReport m9 = moment_checks(PowerMap(T9), 2);
    CHECK(m9.cube_ok);
    CHECK(m9.cube_value == 3162240);
}

TEST_CASE("restricted cubic identity") {
    TowerCtx T9 = make_tower(3, 2);
    PowerMap f(T9);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> pick(0, T9.size() - 1);
    for (int i = 0; i < 400; ++i) {
        long long a = pick(rng), b = 1 + pick(rng) % (T9.size() - 1);
        auto chk = lambda_cubic_identity(f, a, b);
        CHECK(chk.identity_ok);
        CHECK(chk.lambda_count <= 3);
    }
    CHECK_THROWS_AS(lambda_cubic_identity(f, 1, 0), std::invalid_argument);
    TowerCtx T7 = make_tower(7, 1);
    CHECK_THROWS_AS(lambda_cubic_identity(PowerMap(T7), 1, 1), std::invalid_argument);

    // q = 3 (mod 4) branch, exhaustive at q = 3
    TowerCtx T3 = make_tower(3, 1);
    PowerMap f3(T3);
    for (long long a = 0; a < 9; ++a)
        for (long long b = 1; b < 9; ++b) CHECK(lambda_cubic_identity(f3, a, b).identity_ok);
}

TEST_CASE("measured counts satisfy the defining linear system") {
    // total, first and second power sums over the measured distribution
    for (int m : {1, 2}) {
        TowerCtx T(build_field(3, m));
        long long q = T.q(), Q = T.size();
        WalshDistribution d = walsh_distribution(PowerMap(T), WalshEngine::GroupTransform);
        long long total = 0, s1 = 0, s2 = 0, s3c = 0;
        for (auto& [v, c] : d.counts) {
            long long w = v.rational_value();
            total += c;
            s1 += w * c;
            s2 += w * w * c;
            s3c += (w - 1) * (w - 1) * (w - 1) * c;
        }
        CHECK(total == Q * (Q - 1));
        CHECK(s1 == Q * Q - Q);
        CHECK(s2 == Q * Q * (Q - 1));
        CHECK(s3c == q * q * (q * q - 1) * (q * q * q - 3 * q * q + 2));
    }
}

TEST_CASE("engines agree on sampled pairs at q = 27") {
    TowerCtx T(build_field(3, 3));
    PowerMap f(T);
    WalshColumnEngine eng(f);
    std::mt19937_64 rng(27);
    std::uniform_int_distribution<long long> pick(0, T.size() - 1);
    long long cached_b = -1;
    std::vector<long long> buf;
    for (int i = 0; i < 1000; ++i) {
        long long a = pick(rng), b = 1 + pick(rng) % (T.size() - 1);
        if (b != cached_b) {
            buf = eng.column(b);
            cached_b = b;
        }
        CHECK(eng.value_of(buf, a) == walsh_at(f, a, b));
    }
    // restricted cubic identity on sampled pairs at the same size
    for (int i = 0; i < 100; ++i) {
        long long a = pick(rng), b = 1 + pick(rng) % (T.size() - 1);
        CHECK(lambda_cubic_identity(f, a, b).identity_ok);
    }
}

TEST_CASE("parallel degree does not change results") {
    TowerCtx T9 = make_tower(3, 2);
    PowerMap f(T9);
    auto d1 = walsh_distribution(f, WalshEngine::GroupTransform, 1);
    auto d2 = walsh_distribution(f, WalshEngine::GroupTransform, 2);
    auto d5 = walsh_distribution(f, WalshEngine::GroupTransform, 5);
    CHECK(d1 == d2);
    CHECK(d1 == d5);
}
