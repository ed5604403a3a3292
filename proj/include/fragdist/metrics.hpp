#pragma once

#include <vector>

#include "fragdist/pmf.hpp"

namespace fragdist {

// Total variation distance between two finitely supported laws, together
// with a certifying event: tv equals |Q1(achieving_set) - Q2(achieving_set)|
// by construction. tail_bound bounds the contribution of the truncated
// tails; precision_warning is raised (never a failure) when the combined
// tail mass reaches 1e-9.
struct TvReport {
    double tv = 0.0;
    std::vector<int> achieving_set;
    double tail_bound = 0.0;
    bool precision_warning = false;
};

TvReport tv_distance(const PmfVector& a, const PmfVector& b);

// Relative frequencies of a batch of counts; tail_mass is zero.
PmfVector empirical_pmf(const std::vector<int>& counts);

// Empirical law of the samples >= m. Needs at least 100 retained samples.
PmfVector conditional_empirical(const std::vector<int>& counts, int m);

}  // namespace fragdist
