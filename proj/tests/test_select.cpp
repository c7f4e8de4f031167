#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sbmtest/netgen.hpp"
#include "sbmtest/select.hpp"
#include "sbmtest/tw1.hpp"

using namespace sbmtest;

TEST_CASE("default cap") {
    CHECK(default_k_max(100) == 10);
    CHECK(default_k_max(1000) == 10);
    CHECK(default_k_max(8000) == 20);
}

TEST_CASE("mode validation") {
    SeededRng rng(1);
    AdjacencyGraph g(10);
    KEstimateOptions opts;
    opts.bootstrap = false;
    CHECK_THROWS_AS(estimate_k(g, KSelectMode::quantile(0.0), opts, rng), ParamError);
    CHECK_THROWS_AS(estimate_k(g, KSelectMode::power_law(1.0, 0.9), opts, rng), ParamError);
    CHECK_THROWS_AS(estimate_k(g, KSelectMode::power_law(0.0, 0.5), opts, rng), ParamError);
}

TEST_CASE("strong two-community graph stops the scan at 2") {
    SeededRng rng(42);
    const int n = 400;
    const Membership truth = balanced_membership(n, 2);
    SeededRng gen = rng.derive(0);
    auto graph = generate_sbm(truth, BlockMatrix::two_level(2, 0.7, 0.1), gen);

    KEstimateOptions opts;
    opts.bootstrap = true;
    opts.m = 30;
    opts.gof.threads = 2;
    const auto result = estimate_k(graph, KSelectMode::quantile(1e-4), opts, rng);
    CHECK(result.k_hat == 2);
    CHECK_FALSE(result.capped);
    REQUIRE(result.trace.size() == 2);
    CHECK(result.trace[0].k0 == 1);
    CHECK(result.trace[0].rejected);
    CHECK(result.trace[1].k0 == 2);
    CHECK_FALSE(result.trace[1].rejected);
    // quantile-mode thresholds are constant across the scan
    CHECK(result.trace[0].threshold == result.trace[1].threshold);
    CHECK(result.trace[0].threshold ==
          doctest::Approx(tw1_quantile(1.0 - 1e-4 / 2.0)).epsilon(1e-12));

    // determinism
    const auto again = estimate_k(graph, KSelectMode::quantile(1e-4), opts, rng);
    CHECK(again.k_hat == result.k_hat);
    CHECK(again.trace[0].statistic == result.trace[0].statistic);
}

TEST_CASE("cap applies when every stage rejects") {
    SeededRng rng(52);
    const int n = 300;
    const Membership truth = balanced_membership(n, 4);
    SeededRng gen = rng.derive(0);
    auto graph = generate_sbm(truth, BlockMatrix::two_level(4, 0.8, 0.1), gen);

    KEstimateOptions opts;
    opts.bootstrap = false;
    opts.k_max = 2;  // scan cannot reach the true K = 4
    const auto result = estimate_k(graph, KSelectMode::quantile(1e-4), opts, rng);
    CHECK(result.k_hat == 2);
    CHECK(result.capped);
    CHECK(result.trace.size() == 2);
    CHECK(result.trace[0].rejected);
    CHECK(result.trace[1].rejected);
}

TEST_CASE("power-law mode uses c * n^eps as the threshold") {
    SeededRng rng(62);
    const int n = 300;
    const Membership truth = balanced_membership(n, 2);
    SeededRng gen = rng.derive(0);
    auto graph = generate_sbm(truth, BlockMatrix::two_level(2, 0.7, 0.1), gen);

    KEstimateOptions opts;
    opts.bootstrap = false;
    const auto mode = KSelectMode::power_law(0.5, 0.5);
    const auto result = estimate_k(graph, mode, opts, rng);
    const double expected = 0.5 * std::pow(300.0, 0.5);
    for (const auto& stage : result.trace)
        CHECK(stage.threshold == doctest::Approx(expected).epsilon(1e-12));
    CHECK(result.k_hat == 2);
}

TEST_CASE("erdos-renyi accepts K=1 in at least 95 of 100 seeds") {
    SeededRng rng(72);
    const Membership truth(std::vector<int>(500, 1), 1);
    const auto blocks = BlockMatrix::constant(1, 0.3);
    KEstimateOptions opts;
    opts.bootstrap = true;
    opts.m = 50;
    opts.gof.threads = 2;
    int correct = 0;
    for (int seed = 0; seed < 100; ++seed) {
        SeededRng gen = rng.derive(seed);
        auto graph = generate_sbm(truth, blocks, gen);
        const auto result = estimate_k(graph, KSelectMode::quantile(1e-4), opts, gen);
        if (result.k_hat == 1) ++correct;
    }
    CHECK(correct >= 95);
}
