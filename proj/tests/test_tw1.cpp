#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sbmtest/tw1.hpp"
#include "sbmtest/errors.hpp"

using namespace sbmtest;

TEST_CASE("bundled table shape and endpoints") {
    const auto& d = Tw1Distribution::bundled();
    REQUIRE(d.grid_size() >= 800);
    CHECK(d.grid_x(0) <= -10.0);
    CHECK(d.grid_x(d.grid_size() - 1) >= 6.0);
    CHECK(d.grid_cdf(0) <= 1e-8);
    CHECK(d.grid_cdf(d.grid_size() - 1) >= 1.0 - 1e-8);
    for (std::size_t i = 1; i < d.grid_size(); ++i) {
        CHECK(d.grid_x(i) - d.grid_x(i - 1) <= 0.02 + 1e-12);
        CHECK(d.grid_cdf(i) > d.grid_cdf(i - 1));
    }
}

TEST_CASE("cdf is monotone and clamps outside the grid") {
    double prev = 0.0;
    for (double x = -11.0; x <= 9.0; x += 0.013) {
        const double f = tw1_cdf(x);
        CHECK(f >= prev);
        prev = f;
    }
    CHECK(tw1_cdf(-50.0) == Tw1Distribution::bundled().grid_cdf(0));
    CHECK(tw1_cdf(50.0) ==
          Tw1Distribution::bundled().grid_cdf(Tw1Distribution::bundled().grid_size() - 1));
    CHECK_THROWS_AS(tw1_cdf(std::nan("")), ParamError);
}

TEST_CASE("quantile/cdf inverse consistency") {
    for (double p : {0.01, 0.5, 0.975}) {
        CHECK(std::abs(tw1_cdf(tw1_quantile(p)) - p) < 1e-6);
    }
    for (double x = -4.0; x <= 3.0; x += 0.17) {
        CHECK(std::abs(tw1_quantile(tw1_cdf(x)) - x) < 1e-6);
    }
    CHECK_THROWS_AS(tw1_quantile(0.0), ParamError);
    CHECK_THROWS_AS(tw1_quantile(1.0), ParamError);
    CHECK_THROWS_AS(tw1_quantile(-0.3), ParamError);
}

TEST_CASE("moments match the oracle tabulation") {
    const auto [mean, sd] = tw1_moments();
    CHECK(mean == doctest::Approx(-1.2065335746).epsilon(1e-6));
    CHECK(sd == doctest::Approx(1.2679830566).epsilon(1e-6));
}

TEST_CASE("spot cdf values from the independent tabulation") {
    // frozen from the Fredholm-determinant/Painleve cross-checked oracle
    CHECK(std::abs(tw1_cdf(-3.137) - 5.427994287889e-02) < 1e-4);
    CHECK(std::abs(tw1_cdf(0.017) - 8.349720833476e-01) < 1e-4);
    CHECK(std::abs(tw1_cdf(2.041) - 9.902919059312e-01) < 1e-4);
    // upper quantile used by the rejection rule at alpha = 0.05
    CHECK(std::abs(tw1_quantile(0.975) - 1.453771351949) < 1e-4);
}

TEST_CASE("text asset parses, checksum verifies, and matches the bundled table") {
    const auto file = Tw1Distribution::from_file("data/tw1_cdf_b1.txt");
    const auto& bundled = Tw1Distribution::bundled();
    REQUIRE(file.grid_size() == bundled.grid_size());
    for (std::size_t i = 0; i < file.grid_size(); ++i) {
        CHECK(file.grid_x(i) == doctest::Approx(bundled.grid_x(i)).epsilon(1e-12));
        CHECK(file.grid_cdf(i) == doctest::Approx(bundled.grid_cdf(i)).epsilon(1e-12));
    }
    CHECK(file.checksum_hex() == bundled.checksum_hex());
    CHECK(file.version() == bundled.version());
    CHECK(file.mean() == doctest::Approx(bundled.mean()).epsilon(1e-12));
    CHECK_THROWS_AS(Tw1Distribution::from_file("./missing_table.txt"), IoError);
}

TEST_CASE("moments are consistent with the table itself") {
    // quadrature over the quantile function: E[g(X)] = int_0^1 g(q(p)) dp
    const int cells = 20000;
    double mean = 0.0, second = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double p = (i + 0.5) / cells;
        const double q = tw1_quantile(p);
        mean += q;
        second += q * q;
    }
    mean /= cells;
    second /= cells;
    const double sd = std::sqrt(second - mean * mean);
    const auto moments = tw1_moments();
    CHECK(std::abs(mean - moments.mean) < 2e-3);
    CHECK(std::abs(sd - moments.sd) < 2e-3);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xCBF29CE484222325ULL);
    CHECK(fnv1a64("a") == 0xAF63DC4C8601EC8CULL);
    CHECK(fnv1a64("hello") == 0xA430D84680AABD0BULL);
}
