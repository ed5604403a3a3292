#pragma once

// Independent reference computations for the unit tests. Everything here
// deliberately avoids the library's production code paths (Panjer
// recursion, transfer-matrix DP, Stein solvers) so agreement is evidence,
// not tautology.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fragdist/pmf.hpp"

namespace oracle {

// Mass of `pmf` with every support point multiplied by `factor`.
inline fragdist::PmfVector scale_support(const fragdist::PmfVector& pmf, int factor) {
    fragdist::PmfVector out;
    out.offset = pmf.offset * factor;
    out.tol = pmf.tol;
    out.tail_mass = pmf.tail_mass;
    out.probs.assign(static_cast<std::size_t>((pmf.size() - 1) * factor + 1), 0.0);
    for (int i = 0; i < pmf.size(); ++i)
        out.probs[static_cast<std::size_t>(i * factor)] = pmf.probs[static_cast<std::size_t>(i)];
    return out;
}

// Law of sum_j j K_j, K_j ~ Pn(lambda_j) independent, by explicit
// convolution of truncated Poisson laws.
inline fragdist::PmfVector cp_by_convolution(const std::vector<double>& lambdas,
                                             double tol = 1e-14) {
    fragdist::PmfVector acc = fragdist::PmfVector::delta(0, tol);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        if (lambdas[j] == 0.0) continue;
        acc = fragdist::convolve(acc, scale_support(fragdist::poisson_pmf(lambdas[j], tol),
                                                    static_cast<int>(j + 1)));
    }
    return acc;
}

inline double max_pointwise_diff(const fragdist::PmfVector& a, const fragdist::PmfVector& b) {
    const int lo = std::min(a.offset, b.offset);
    const int hi = std::max(a.max_point(), b.max_point());
    double worst = 0.0;
    for (int k = lo; k <= hi; ++k) worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
    return worst;
}

// Binomial(n, p) mass function through lgamma.
inline double binomial_pmf(int n, double p, int k) {
    const double logc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    return std::exp(logc + k * std::log(p) + (n - k) * std::log1p(-p));
}

// Exhaustive 2^n enumeration of the circular two-runs count. Weights use
// power tables and buckets accumulate in extended precision so the
// oracle's own rounding stays far below the comparison tolerance.
inline std::vector<double> tworuns_enumeration(int n, double p) {
    std::vector<double> pow_p(static_cast<std::size_t>(n) + 1, 1.0);
    std::vector<double> pow_q(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k) {
        pow_p[static_cast<std::size_t>(k)] = pow_p[static_cast<std::size_t>(k - 1)] * p;
        pow_q[static_cast<std::size_t>(k)] = pow_q[static_cast<std::size_t>(k - 1)] * (1.0 - p);
    }
    std::vector<long double> acc(static_cast<std::size_t>(n) + 1, 0.0L);
    for (std::uint32_t cfg = 0; cfg < (1u << n); ++cfg) {
        int ones = 0;
        int pairs = 0;
        for (int i = 0; i < n; ++i) {
            const bool yi = (cfg >> i) & 1u;
            ones += yi ? 1 : 0;
            pairs += (yi && ((cfg >> ((i + 1) % n)) & 1u)) ? 1 : 0;
        }
        acc[static_cast<std::size_t>(pairs)] +=
            static_cast<long double>(pow_p[static_cast<std::size_t>(ones)]) *
            pow_q[static_cast<std::size_t>(n - ones)];
    }
    std::vector<double> law(acc.begin(), acc.end());
    return law;
}

// Random small pmf with exact unit mass, for convolution/TV properties.
inline fragdist::PmfVector random_pmf(std::mt19937_64& rng, int max_len = 6) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> off_dist(0, 3);
    std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
    const int len = len_dist(rng);
    std::vector<double> probs(static_cast<std::size_t>(len));
    double total = 0.0;
    for (double& v : probs) {
        v = mass_dist(rng);
        total += v;
    }
    for (double& v : probs) v /= total;
    return fragdist::PmfVector{off_dist(rng), std::move(probs), 0.0, 1e-12};
}

}  // namespace oracle
