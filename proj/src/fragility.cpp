#include "fragdist/fragility.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fragdist/error.hpp"
#include "fragdist/metrics.hpp"

namespace fragdist {

int index_I_m(const ClusterDistribution& pi, int m) {
    if (m < 1) fail("invalid-parameter", "fragility order m must be at least 1");

    const int J = pi.max_size();
    std::vector<bool> support(static_cast<std::size_t>(J));
    for (int j = 0; j < J; ++j) support[static_cast<std::size_t>(j)] = pi.pi[static_cast<std::size_t>(j)] > 0.0;

    const int start = (m + J - 1) / J;  // below this, i-fold sums cannot reach m
    // reach[s] == true iff s is a possible total of `start` cluster sizes.
    std::vector<bool> reach(1, true);   // zero summands: total 0
    int reach_offset = 0;
    auto add_one_cluster = [&]() {
        std::vector<bool> next(reach.size() + static_cast<std::size_t>(J) - 1, false);
        for (std::size_t s = 0; s < reach.size(); ++s) {
            if (!reach[s]) continue;
            for (int j = 0; j < J; ++j)
                if (support[static_cast<std::size_t>(j)]) next[s + static_cast<std::size_t>(j)] = true;
        }
        reach = std::move(next);
        reach_offset += 1;  // supports start at cluster size 1
    };
    for (int i = 0; i < start; ++i) add_one_cluster();

    for (int i = start; i <= m; ++i) {
        for (std::size_t s = 0; s < reach.size(); ++s) {
            const int total = reach_offset + static_cast<int>(s);
            if (reach[s] && total >= m) return i;
        }
        add_one_cluster();
    }
    // Unreachable: i = m summands of size >= 1 always total at least m.
    fail("invalid-parameter", "cluster distribution has empty support");
}

FragilityResult fd_limit(const ClusterDistribution& pi, int m) {
    FragilityResult result;
    result.m = m;
    result.I_m = index_I_m(pi, m);
    result.law = conditional_truncate(convolve_power(pi, result.I_m), m);
    return result;
}

namespace {

// Extends the Panjer masses until the conditional law on {k >= m} is
// resolved: the geometric window bound on the remaining mass must drop
// below tol relative to the accumulated conditional mass. Returns the
// masses and the bound on what lies beyond them.
struct ExtendedMasses {
    std::vector<double> masses;
    double tail_bound = 0.0;
};

ExtendedMasses panjer_conditional(const std::vector<double>& lambdas, int m, double tol) {
    const std::vector<double> jlam = detail::size_weighted_rates(lambdas);
    const int J = static_cast<int>(jlam.size());
    double total = 0.0;
    double jlam_total = 0.0;
    for (double l : lambdas) total += l;
    for (double v : jlam) jlam_total += v;

    ExtendedMasses out;
    out.masses.push_back(std::exp(-total));
    double cum = out.masses[0];
    double cond_sum = (m == 0) ? cum : 0.0;

    const int hard_cap = 4'000'000;
    for (int n = 1; n < hard_cap; ++n) {
        const double p = detail::panjer_step(jlam, out.masses);
        out.masses.push_back(p);
        cum += p;
        if (n >= m) cond_sum += p;
        if (n < m + J) continue;

        // Past n, each mass is below (jlam_total / n) * (window max), so
        // the window maxima contract geometrically and the remaining mass
        // is below J * window * rho / (1 - rho).
        const double rho = jlam_total / (n + 1.0);
        if (!(rho < 1.0)) continue;
        double window = 0.0;
        for (int j = 0; j < J; ++j)
            window = std::max(window, out.masses[out.masses.size() - 1 - static_cast<std::size_t>(j)]);
        const double remaining = J * window * rho / (1.0 - rho);
        if (cum >= 1.0 - tol && (remaining <= tol * cond_sum || cond_sum == 0.0)) {
            out.tail_bound = std::min(remaining, std::max(0.0, 1.0 - cum));
            return out;
        }
    }
    fail("truncation-too-small", "Panjer extension exceeded the support cap");
}

}  // namespace

PmfVector conditional_cp_law(double rate, const ClusterDistribution& pi, int m, double tol) {
    if (!(rate > 0.0) || !std::isfinite(rate)) fail("invalid-parameter", "rate must be positive");
    if (rate > kLambdaCap) fail("out-of-range", "total cluster rate above underflow guard 500");
    if (m < 0) fail("invalid-parameter", "conditioning level m must be non-negative");
    if (!(tol > 0.0) || !(tol < 1.0)) fail("invalid-parameter", "tol must lie in (0, 1)");

    std::vector<double> lambdas(pi.pi.size());
    for (std::size_t j = 0; j < pi.pi.size(); ++j) lambdas[j] = rate * pi.pi[j];

    ExtendedMasses ext = panjer_conditional(lambdas, m, tol);
    PmfVector full;
    full.offset = 0;
    full.probs = std::move(ext.masses);
    full.tail_mass = ext.tail_bound;
    full.tol = tol;
    return conditional_truncate(full, m);
}

std::vector<std::pair<double, double>> fd_convergence_table(const ClusterDistribution& pi, int m,
                                                            const std::vector<double>& rates,
                                                            double tol) {
    if (rates.empty()) fail("invalid-parameter", "rates list is empty");
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (!(rates[i] > 0.0)) fail("invalid-parameter", "rates must be positive");
        if (i > 0 && !(rates[i] < rates[i - 1]))
            fail("invalid-parameter", "rates must be strictly decreasing");
    }

    const FragilityResult limit = fd_limit(pi, m);
    std::vector<std::pair<double, double>> table;
    table.reserve(rates.size());
    for (double rate : rates) {
        const PmfVector law = conditional_cp_law(rate, pi, m, tol);
        table.emplace_back(rate, tv_distance(law, limit.law).tv);
    }
    return table;
}

}  // namespace fragdist
