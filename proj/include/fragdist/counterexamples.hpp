#pragma once

#include <string>
#include <vector>

namespace fragdist {

// Closed forms built from the density that equals 2 on the blocks
// [1 - 2^-k, 1 - 3*2^-(k+2)], k = 0, 1, 2, ..., and 0 in the gaps
// between them. Each block and each gap has length 2^-k / 4; block k
// carries mass 2^-(k+1). Along y_k = 1 - 2^-k the survival/(1-y) ratio is
// exactly 1, along y_k = 1 - 3*2^-(k+1) it is exactly 2/3, so the ratio
// has no limit at 1.

// Distribution function of the block density on [0, 1].
double G1_cdf(double y);

// (1 - G1(y)) / (1 - y) for y in [0, 1). Evaluated through the exact
// survival function, never through 1 - G1_cdf(y), which would cancel.
double ratio_r1(double y);

// G2(z) = 1 - (1 - z)(1 - G1(z)) on [0, 1].
double G2_cdf(double z);

// sqrt(2) (1 - s) / (1 - G1(s)): the one-exceedance to two-exceedance
// odds of the bivariate construction. Oscillates between sqrt(2) and
// 3 sqrt(2) / 2.
double bivariate_ratio(double s);

// 3 / (sqrt(3)(1 - G1(s)) + 3(1 - s) + 3): converges to 1 at the right
// endpoint.
double trivariate_m1(double s);

// sqrt(3) / ((1 - G1(s))/(1 - s) + sqrt(3)): oscillates between
// sqrt(3)/(1 + sqrt(3)) and sqrt(3)/(2/3 + sqrt(3)).
double trivariate_m2(double s);

enum class OscFunction { ratio_r1, bivariate, trivariate_m1, trivariate_m2 };

// Values along the two probe sequences y_k = 1 - 2^-k and
// y_k = 1 - 3*2^-(k+1), k = 1..depth (k = 0 falls outside [0,1] for the
// second sequence). limit_a/limit_b are the deepest values; gap is their
// absolute difference.
struct OscillationReport {
    std::string function;
    int depth = 0;
    std::vector<double> seq_a;
    std::vector<double> seq_b;
    double limit_a = 0.0;
    double limit_b = 0.0;
    double gap = 0.0;
};

// depth is capped at 45: beyond that 1 - y cannot resolve the block
// structure in double precision.
OscillationReport oscillation_report(OscFunction f, int depth);

OscFunction osc_function_from_name(const std::string& name);  // r1|biv|tri1|tri2

}  // namespace fragdist
