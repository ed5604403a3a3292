#include "fragdist/counterexamples.hpp"

#include <cmath>

#include "fragdist/error.hpp"

namespace fragdist {

namespace {

constexpr int kMaxDepth = 45;

void check_unit_interval(double y, bool allow_one) {
    if (!(y >= 0.0) || y > 1.0 || (!allow_one && y == 1.0))
        fail("domain-error", "argument outside the unit interval");
}

// Survival mass 1 - G1(1 - t) as an exact function of t = 1 - y.
// For t in (2^-(k+1), 2^-k] the survival is max(2t - 2^-k, 2^-(k+1)):
// linear with slope 2 through block k, flat through the gap below it.
// Both candidates are exact doubles and within a factor of two of each
// other, so the arithmetic here is exact.
double g1_tail(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;

    int k = static_cast<int>(std::floor(-std::log2(t)));
    // Pin the bracket 2^-(k+1) < t <= 2^-k against log2 edge error.
    while (t > std::ldexp(1.0, -k)) --k;
    while (t <= std::ldexp(1.0, -(k + 1))) ++k;

    const double block_top = std::ldexp(1.0, -k);
    return std::max(2.0 * t - block_top, 0.5 * block_top);
}

}  // namespace

double G1_cdf(double y) {
    check_unit_interval(y, /*allow_one=*/true);
    return 1.0 - g1_tail(1.0 - y);
}

double ratio_r1(double y) {
    check_unit_interval(y, /*allow_one=*/false);
    const double t = 1.0 - y;
    return g1_tail(t) / t;
}

double G2_cdf(double z) {
    check_unit_interval(z, /*allow_one=*/true);
    const double t = 1.0 - z;
    return 1.0 - t * g1_tail(t);
}

double bivariate_ratio(double s) {
    check_unit_interval(s, /*allow_one=*/false);
    const double t = 1.0 - s;
    return std::sqrt(2.0) * t / g1_tail(t);
}

double trivariate_m1(double s) {
    check_unit_interval(s, /*allow_one=*/false);
    const double t = 1.0 - s;
    return 3.0 / (std::sqrt(3.0) * g1_tail(t) + 3.0 * t + 3.0);
}

double trivariate_m2(double s) {
    check_unit_interval(s, /*allow_one=*/false);
    const double t = 1.0 - s;
    return std::sqrt(3.0) / (g1_tail(t) / t + std::sqrt(3.0));
}

OscFunction osc_function_from_name(const std::string& name) {
    if (name == "r1") return OscFunction::ratio_r1;
    if (name == "biv") return OscFunction::bivariate;
    if (name == "tri1") return OscFunction::trivariate_m1;
    if (name == "tri2") return OscFunction::trivariate_m2;
    fail("invalid-parameter", "unknown counterexample function '" + name + "'");
}

OscillationReport oscillation_report(OscFunction f, int depth) {
    if (depth < 1) fail("invalid-parameter", "depth must be at least 1");
    if (depth > kMaxDepth)
        fail("resolution-error", "depth exceeds the double-precision block resolution (45)");

    double (*fn)(double) = nullptr;
    const char* name = nullptr;
    switch (f) {
        case OscFunction::ratio_r1: fn = ratio_r1; name = "r1"; break;
        case OscFunction::bivariate: fn = bivariate_ratio; name = "biv"; break;
        case OscFunction::trivariate_m1: fn = trivariate_m1; name = "tri1"; break;
        case OscFunction::trivariate_m2: fn = trivariate_m2; name = "tri2"; break;
    }

    OscillationReport report;
    report.function = name;
    report.depth = depth;
    for (int k = 1; k <= depth; ++k) {
        const double y_a = 1.0 - std::ldexp(1.0, -k);        // 1 - 2^-k
        const double y_b = 1.0 - 3.0 * std::ldexp(1.0, -(k + 1));  // 1 - 3*2^-(k+1)
        report.seq_a.push_back(fn(y_a));
        report.seq_b.push_back(fn(y_b));
    }
    report.limit_a = report.seq_a.back();
    report.limit_b = report.seq_b.back();
    report.gap = std::abs(report.limit_a - report.limit_b);
    return report;
}

}  // namespace fragdist
