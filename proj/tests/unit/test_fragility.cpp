#include <cmath>

#include <doctest.h>

#include "fragdist/error.hpp"
#include "fragdist/fragility.hpp"
#include "fragdist/metrics.hpp"
#include "oracles.hpp"

using namespace fragdist;

TEST_CASE("index_I_m examples") {
    CHECK(index_I_m(ClusterDistribution({1.0}), 3) == 3);
    CHECK(index_I_m(ClusterDistribution({0.5, 0.5}), 2) == 1);
    CHECK(index_I_m(ClusterDistribution({0.5, 0.5}), 3) == 2);
    // Support {2} only: reaching 3 needs two clusters.
    CHECK(index_I_m(ClusterDistribution({0.0, 1.0}), 3) == 2);
    CHECK_THROWS_AS(index_I_m(ClusterDistribution({1.0}), 0), error);
}

TEST_CASE("index_I_m is minimal against the convolution oracle") {
    const std::vector<ClusterDistribution> pis = {
        ClusterDistribution({1.0}), ClusterDistribution({0.5, 0.5}),
        ClusterDistribution({0.6, 0.3, 0.1}), ClusterDistribution({0.0, 0.7, 0.0, 0.3})};
    for (const auto& pi : pis) {
        for (int m = 1; m <= 8; ++m) {
            const int idx = index_I_m(pi, m);
            CHECK(idx <= m);
            CHECK(convolve_power(pi, idx).mass_from(m) > 0.0);
            if (idx > 1) CHECK(convolve_power(pi, idx - 1).mass_from(m) == 0.0);
        }
    }
}

TEST_CASE("fd_limit closed forms") {
    SUBCASE("order one returns the cluster law exactly") {
        for (const auto& pi : {ClusterDistribution({1.0}), ClusterDistribution({0.5, 0.5}),
                               ClusterDistribution({0.6, 0.3, 0.1})}) {
            const FragilityResult result = fd_limit(pi, 1);
            CHECK(result.I_m == 1);
            CHECK(oracle::max_pointwise_diff(result.law, pi.to_pmf()) <= 1e-14);
        }
    }

    SUBCASE("unit clusters force the point mass") {
        const FragilityResult result = fd_limit(ClusterDistribution({1.0}), 3);
        CHECK(result.I_m == 3);
        CHECK(result.law.offset == 3);
        CHECK(result.law.at(3) == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("uniform clusters at order three") {
        const FragilityResult result = fd_limit(ClusterDistribution({0.5, 0.5}), 3);
        CHECK(result.I_m == 2);
        CHECK(result.law.at(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(result.law.at(4) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }

    SUBCASE("no mass below m") {
        for (int m = 1; m <= 6; ++m) {
            const FragilityResult result = fd_limit(ClusterDistribution({0.6, 0.3, 0.1}), m);
            CHECK(result.law.offset >= m);
            CHECK(result.I_m <= m);
        }
    }
}

TEST_CASE("conditional_cp_law matches compositions and oracles") {
    SUBCASE("unit clusters reduce to conditional Poisson") {
        const PmfVector law = conditional_cp_law(1.0, ClusterDistribution({1.0}), 1);
        const PmfVector expected = conditional_truncate(poisson_pmf(1.0), 1);
        CHECK(oracle::max_pointwise_diff(law, expected) <= 1e-12);
    }

    SUBCASE("matches the brute-force conditional compound Poisson law") {
        const PmfVector law = conditional_cp_law(2.0, ClusterDistribution({0.5, 0.5}), 1);
        const PmfVector brute = conditional_truncate(oracle::cp_by_convolution({1.0, 1.0}), 1);
        CHECK(oracle::max_pointwise_diff(law, brute) <= 1e-10);
    }

    SUBCASE("approaches the fragility limit as the rate vanishes") {
        const ClusterDistribution pi({0.5, 0.5});
        const PmfVector limit = fd_limit(pi, 3).law;
        double previous = 1.0;
        for (double rate : {1e-3, 1e-4, 1e-5}) {
            const double tv = tv_distance(conditional_cp_law(rate, pi, 3), limit).tv;
            CHECK(tv < previous);
            previous = tv;
        }
        CHECK(previous < 1e-4);
    }

    CHECK_THROWS_AS(conditional_cp_law(0.0, ClusterDistribution({1.0}), 1), error);
}

TEST_CASE("fd_convergence_table") {
    SUBCASE("unit clusters have the explicit Poisson tail distance") {
        const std::vector<double> rates = {1e-1, 1e-2, 1e-3};
        const auto table = fd_convergence_table(ClusterDistribution({1.0}), 1, rates);
        REQUIRE(table.size() == rates.size());
        for (std::size_t i = 0; i < rates.size(); ++i) {
            const double lambda = rates[i];
            // d_TV(Pn^{(1)}(lambda), delta_1) = P(N >= 2 | N >= 1).
            const double p_ge_1 = -std::expm1(-lambda);
            const double expected = 1.0 - lambda * std::exp(-lambda) / p_ge_1;
            CHECK(table[i].second == doctest::Approx(expected).epsilon(1e-9));
        }
        CHECK(table.back().second < table.front().second);
    }

    SUBCASE("decreasing over two decades for a three-point cluster law") {
        const auto table =
            fd_convergence_table(ClusterDistribution({0.6, 0.3, 0.1}), 4, {1e-2, 1e-3, 1e-4, 1e-5});
        for (std::size_t i = 1; i < table.size(); ++i) CHECK(table[i].second < table[i - 1].second);
        CHECK(table.back().second < 1e-3);
    }

    SUBCASE("four-point cluster law converges for every m up to 8") {
        const ClusterDistribution pi({0.4, 0.3, 0.2, 0.1});
        for (int m = 1; m <= 8; ++m) {
            const auto table = fd_convergence_table(pi, m, {1e-2, 1e-3, 1e-4, 1e-5});
            for (std::size_t i = 1; i < table.size(); ++i)
                CHECK(table[i].second <= table[i - 1].second);
            CHECK(table.back().second < 1e-3);
        }
    }

    CHECK_THROWS_AS(fd_convergence_table(ClusterDistribution({1.0}), 1, {1e-3, 1e-2}), error);
    CHECK_THROWS_AS(fd_convergence_table(ClusterDistribution({1.0}), 1, {}), error);
}
