#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "sbmtest/rng.hpp"

using sbmtest::SeededRng;

TEST_CASE("same seed, same sequence") {
    SeededRng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive depends only on (key, stream), not on draw state") {
    SeededRng fresh(7);
    SeededRng used(7);
    for (int i = 0; i < 100; ++i) used.next_u64();
    CHECK(fresh.derive(3).next_u64() == used.derive(3).next_u64());
    CHECK(fresh.derive(3).key() == used.derive(3).key());
}

TEST_CASE("derived streams differ from each other and the parent") {
    SeededRng root(99);
    std::set<std::uint64_t> keys;
    keys.insert(root.key());
    for (std::uint64_t r = 0; r < 200; ++r) keys.insert(root.derive(r).key());
    CHECK(keys.size() == 201);
}

TEST_CASE("nested derivation is path dependent") {
    SeededRng root(5);
    CHECK(root.derive(1).derive(2).key() != root.derive(2).derive(1).key());
}

TEST_CASE("uniform lies in [0,1) and looks uniform") {
    SeededRng rng(123);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / 100000 - 0.5) < 0.01);
}

TEST_CASE("below is in range and unbiased-ish") {
    SeededRng rng(5);
    int counts[7] = {0};
    for (int i = 0; i < 70000; ++i) ++counts[rng.below(7)];
    for (int c = 0; c < 7; ++c) CHECK(std::abs(counts[c] - 10000) < 500);
    CHECK_THROWS_AS(rng.below(0), sbmtest::ParamError);
}

TEST_CASE("normal moments") {
    SeededRng rng(11);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sq / n - 1.0) < 0.02);
}

TEST_CASE("gamma mean and guards") {
    SeededRng rng(13);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += rng.gamma(2.5);
    CHECK(std::abs(sum / n - 2.5) < 0.05);
    CHECK_THROWS_AS(rng.gamma(0.0), sbmtest::ParamError);
    CHECK_THROWS_AS(rng.gamma(-1.0), sbmtest::ParamError);
}

TEST_CASE("dirichlet rows sum to one; K=1 exact") {
    SeededRng rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto row = rng.dirichlet(4, 0.5);
        double sum = 0.0;
        for (double v : row) {
            CHECK(v >= 0.0);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
    const auto unit = rng.dirichlet(1, 0.5);
    CHECK(unit.size() == 1);
    CHECK(unit[0] == 1.0);
    CHECK_THROWS_AS(rng.dirichlet(3, 0.0), sbmtest::ParamError);
}
