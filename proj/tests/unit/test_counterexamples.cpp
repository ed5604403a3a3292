#include <cmath>

#include <doctest.h>

#include "fragdist/counterexamples.hpp"
#include "fragdist/error.hpp"

using namespace fragdist;

TEST_CASE("G1 survival at the probe sequences") {
    for (int k = 0; k <= 40; ++k) {
        const double y = 1.0 - std::ldexp(1.0, -k);
        CHECK(1.0 - G1_cdf(y) == doctest::Approx(std::ldexp(1.0, -k)).epsilon(1e-14));
    }
    for (int k = 1; k <= 40; ++k) {
        const double y = 1.0 - 3.0 * std::ldexp(1.0, -(k + 1));
        CHECK(1.0 - G1_cdf(y) == doctest::Approx(std::ldexp(1.0, -k)).epsilon(1e-14));
    }
    CHECK(G1_cdf(0.0) == 0.0);
    CHECK(G1_cdf(1.0) == 1.0);
    CHECK_THROWS_AS(G1_cdf(-0.1), error);
    CHECK_THROWS_AS(G1_cdf(1.1), error);
}

TEST_CASE("block density integrates to one") {
    // Block k has density 2 on an interval of length 2^-k / 4.
    double total = 0.0;
    for (int k = 0; k <= 60; ++k) total += 2.0 * std::ldexp(1.0, -k) / 4.0;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ratio_r1") {
    for (int k = 1; k <= 40; ++k) {
        CHECK(ratio_r1(1.0 - std::ldexp(1.0, -k)) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(ratio_r1(1.0 - 3.0 * std::ldexp(1.0, -(k + 1))) ==
              doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    }

    SUBCASE("bounded between 2/3 and 1 everywhere") {
        for (int i = 0; i < 100000; ++i) {
            const double y = i / 100000.0;
            const double r = ratio_r1(y);
            CHECK(r >= 2.0 / 3.0 - 1e-14);
            CHECK(r <= 1.0 + 1e-14);
        }
    }

    SUBCASE("strictly interior inside a zero-density gap") {
        // Gap of block 2: y in (1 - 3*2^-4, 1 - 2^-3).
        const double y = 1.0 - 0.17;
        const double r = ratio_r1(y);
        CHECK(r > 2.0 / 3.0 + 1e-3);
        CHECK(r < 1.0 - 1e-3);
    }

    CHECK_THROWS_AS(ratio_r1(1.0), error);
}

TEST_CASE("G2_cdf") {
    CHECK(G2_cdf(0.0) == 0.0);
    CHECK(G2_cdf(1.0) == 1.0);
    for (int k = 0; k <= 25; ++k) {
        const double z = 1.0 - std::ldexp(1.0, -k);
        CHECK(1.0 - G2_cdf(z) == doctest::Approx(std::ldexp(1.0, -2 * k)).epsilon(1e-12));
    }

    double previous = -1.0;
    for (int i = 0; i <= 100000; ++i) {
        const double value = G2_cdf(i / 100000.0);
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("bivariate and trivariate ratios") {
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);

    for (int k = 2; k <= 40; ++k) {
        CHECK(bivariate_ratio(1.0 - std::ldexp(1.0, -k)) == doctest::Approx(s2).epsilon(1e-13));
        CHECK(bivariate_ratio(1.0 - 3.0 * std::ldexp(1.0, -(k + 1))) ==
              doctest::Approx(1.5 * s2).epsilon(1e-13));
    }

    CHECK(trivariate_m1(0.0) == doctest::Approx(3.0 / (s3 + 6.0)).epsilon(1e-14));
    double previous = 0.0;
    for (int k = 0; k <= 40; ++k) {
        const double value = trivariate_m1(1.0 - std::ldexp(1.0, -k));
        CHECK(value > previous);
        previous = value;
    }
    CHECK(previous == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(trivariate_m2(1.0 - std::ldexp(1.0, -30)) ==
          doctest::Approx(s3 / (1.0 + s3)).epsilon(1e-12));
    CHECK(trivariate_m2(1.0 - 3.0 * std::ldexp(1.0, -31)) ==
          doctest::Approx(s3 / (2.0 / 3.0 + s3)).epsilon(1e-12));
}

TEST_CASE("oscillation_report") {
    const OscillationReport r1 = oscillation_report(OscFunction::ratio_r1, 40);
    CHECK(r1.limit_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.limit_b == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r1.gap == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const OscillationReport biv = oscillation_report(OscFunction::bivariate, 40);
    CHECK(biv.gap == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));

    const OscillationReport t1 = oscillation_report(OscFunction::trivariate_m1, 40);
    CHECK(t1.gap < 1e-9);

    const OscillationReport t2 = oscillation_report(OscFunction::trivariate_m2, 40);
    const double s3 = std::sqrt(3.0);
    CHECK(t2.gap == doctest::Approx(s3 / (2.0 / 3.0 + s3) - s3 / (1.0 + s3)).epsilon(1e-12));
    CHECK(std::abs(t2.gap - 0.0881) < 1e-4);

    SUBCASE("per-sequence tails settle") {
        for (const auto* seq : {&r1.seq_a, &r1.seq_b, &t2.seq_a, &t2.seq_b}) {
            for (std::size_t i = seq->size() - 5; i < seq->size(); ++i)
                CHECK(std::abs((*seq)[i] - seq->back()) < 1e-9);
        }
    }

    CHECK_THROWS_AS(oscillation_report(OscFunction::ratio_r1, 46), error);
    CHECK_THROWS_AS(oscillation_report(OscFunction::ratio_r1, 0), error);
    CHECK(osc_function_from_name("tri2") == OscFunction::trivariate_m2);
    CHECK_THROWS_AS(osc_function_from_name("nope"), error);
}
