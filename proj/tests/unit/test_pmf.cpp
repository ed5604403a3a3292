#include <cmath>
#include <random>

#include <doctest.h>

#include "fragdist/error.hpp"
#include "fragdist/pmf.hpp"
#include "oracles.hpp"

using namespace fragdist;

namespace {

void check_mass_closure(const PmfVector& pmf) {
    CHECK(std::abs(pmf.sum() + pmf.tail_mass - 1.0) <= 10.0 * pmf.tol);
    CHECK(pmf.tail_mass <= pmf.tol);
}

}  // namespace

TEST_CASE("poisson_pmf basics") {
    const PmfVector degenerate = poisson_pmf(0.0);
    CHECK(degenerate.offset == 0);
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate.probs[0] == 1.0);

    const PmfVector unit = poisson_pmf(1.0);
    CHECK(unit.probs[0] == doctest::Approx(0.3678794411714423).epsilon(1e-12));
    check_mass_closure(unit);

    const PmfVector two = poisson_pmf(2.0);
    CHECK(two.at(2) == doctest::Approx(0.2706705664732254).epsilon(1e-12));
    check_mass_closure(two);

    CHECK_THROWS_WITH_AS(poisson_pmf(std::nan("")), doctest::Contains("finite"), error);
    CHECK_THROWS_AS(poisson_pmf(-1.0), error);
    CHECK_THROWS_AS(poisson_pmf(501.0), error);
}

TEST_CASE("nb_pmf values and balance identity") {
    const PmfVector geometric = nb_pmf(NegBinParams(1.0, 0.5));
    for (int k = 0; k < 10; ++k)
        CHECK(geometric.at(k) == doctest::Approx(std::pow(0.5, k + 1)).epsilon(1e-12));

    const PmfVector nb = nb_pmf(NegBinParams(2.0, 0.3));
    CHECK(nb.at(0) == doctest::Approx(0.49).epsilon(1e-14));
    CHECK(nb.at(1) == doctest::Approx(0.294).epsilon(1e-14));
    check_mass_closure(nb);

    // (k+1) p_{k+1} = p (r+k) p_k at every stored point.
    for (double r : {0.5, 2.0, 7.5}) {
        for (double p : {0.1, 0.45, 0.8}) {
            const PmfVector law = nb_pmf(NegBinParams(r, p));
            for (int k = 0; k + 1 < law.size(); ++k) {
                const double lhs = (k + 1) * law.at(k + 1);
                const double rhs = p * (r + k) * law.at(k);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs));
            }
        }
    }

    CHECK_THROWS_AS(NegBinParams(0.0, 0.5), error);
    CHECK_THROWS_AS(NegBinParams(1.0, 0.0), error);
    CHECK_THROWS_AS(NegBinParams(1.0, 1.0), error);
}

TEST_CASE("cp_pmf with unit clusters is Poisson") {
    for (double lambda : {0.1, 1.0, 5.0, 20.0}) {
        const PmfVector cp = cp_pmf(CompoundPoissonParams({lambda}));
        const PmfVector pn = poisson_pmf(lambda);
        CHECK(oracle::max_pointwise_diff(cp, pn) <= 1e-12);
    }
}

TEST_CASE("cp_pmf Panjer values") {
    const PmfVector law = cp_pmf(CompoundPoissonParams({0.5, 0.25}));
    const double e75 = std::exp(-0.75);
    CHECK(law.at(0) == doctest::Approx(e75).epsilon(1e-13));
    CHECK(law.at(1) == doctest::Approx(0.5 * e75).epsilon(1e-13));
    CHECK(law.at(2) == doctest::Approx(0.375 * e75).epsilon(1e-13));
    check_mass_closure(law);

    const PmfVector zero = cp_pmf(CompoundPoissonParams({0.0, 0.0}));
    CHECK(zero.size() == 1);
    CHECK(zero.at(0) == 1.0);
    CHECK(cp_pmf(CompoundPoissonParams({})).at(0) == 1.0);

    CHECK_THROWS_AS(cp_pmf(CompoundPoissonParams({600.0})), error);
    CHECK_THROWS_AS(CompoundPoissonParams({-0.1}), error);
}

TEST_CASE("cp_pmf equals the convolution oracle") {
    const std::vector<std::vector<double>> grids = {
        {0.5, 0.25}, {2.0, 1.0, 0.5}, {1.5, 1.0, 0.3, 0.2}, {0.0, 1.2, 0.0, 0.8}};
    for (const auto& lambdas : grids) {
        const PmfVector fast = cp_pmf(CompoundPoissonParams(lambdas), 1e-13);
        const PmfVector slow = oracle::cp_by_convolution(lambdas);
        CHECK(oracle::max_pointwise_diff(fast, slow) <= 1e-10);
    }
}

TEST_CASE("conditional_truncate") {
    const PmfVector pn = poisson_pmf(1.0);

    const PmfVector whole = conditional_truncate(pn, 0);
    CHECK(oracle::max_pointwise_diff(whole, pn) <= 1e-10);

    const PmfVector above = conditional_truncate(pn, 1);
    CHECK(above.offset == 1);
    CHECK(above.at(1) == doctest::Approx(0.5819767068693265).epsilon(1e-12));
    CHECK(std::abs(above.sum() + above.tail_mass - 1.0) <= 1e-10);

    CHECK_THROWS_WITH_AS(conditional_truncate(PmfVector::delta(0), 1),
                         doctest::Contains("not resolved"), error);

    // Conditioning inside the discarded tail is detected via tail_mass.
    PmfVector truncated = poisson_pmf(1.0, 1e-6);
    CHECK_THROWS_AS(conditional_truncate(truncated, truncated.max_point() + 3), error);
}

TEST_CASE("convolve identities and exactness") {
    const PmfVector q = poisson_pmf(0.7);
    CHECK(oracle::max_pointwise_diff(convolve(PmfVector::delta(0), q), q) == 0.0);

    const PmfVector d5 = convolve(PmfVector::delta(2), PmfVector::delta(3));
    CHECK(d5.offset == 5);
    CHECK(d5.at(5) == 1.0);

    const PmfVector half{1, {0.5, 0.5}, 0.0, 1e-12};
    const PmfVector sq = convolve(half, half);
    CHECK(sq.at(2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sq.at(3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sq.at(4) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("convolve is commutative and associative") {
    std::mt19937_64 rng(0xfeedULL);
    for (int trial = 0; trial < 25; ++trial) {
        const PmfVector a = oracle::random_pmf(rng);
        const PmfVector b = oracle::random_pmf(rng);
        const PmfVector c = oracle::random_pmf(rng);
        CHECK(oracle::max_pointwise_diff(convolve(a, b), convolve(b, a)) <= 1e-12);
        CHECK(oracle::max_pointwise_diff(convolve(convolve(a, b), c),
                                         convolve(a, convolve(b, c))) <= 1e-12);
    }
}

TEST_CASE("convolve_power") {
    const ClusterDistribution uniform12({0.5, 0.5});
    const PmfVector sq = convolve_power(uniform12, 2);
    CHECK(sq.at(2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sq.at(3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sq.at(4) == doctest::Approx(0.25).epsilon(1e-15));

    const PmfVector empty_product = convolve_power(uniform12, 0);
    CHECK(empty_product.offset == 0);
    CHECK(empty_product.at(0) == 1.0);
}

TEST_CASE("type validation") {
    CHECK_THROWS_AS(ClusterDistribution({}), error);
    CHECK_THROWS_AS(ClusterDistribution({0.5, 0.4}), error);   // sums to 0.9
    CHECK_THROWS_AS(ClusterDistribution({1.2, -0.2}), error);  // negative entry

    PmfVector bad{0, {0.5, 0.6}, 0.0, 1e-12};
    CHECK_THROWS_AS(bad.validate(), error);
    PmfVector negative{0, {1.1, -0.1}, 0.0, 1e-12};
    CHECK_THROWS_AS(negative.validate(), error);
}
