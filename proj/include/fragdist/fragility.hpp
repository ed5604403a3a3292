#pragma once

#include <utility>
#include <vector>

#include "fragdist/pmf.hpp"

namespace fragdist {

// Limit fragility distribution of order m: the I_m-fold cluster-law
// convolution restricted to {m, m+1, ...} and renormalised.
struct FragilityResult {
    int m = 1;
    int I_m = 1;
    PmfVector law;
};

// Least i >= 1 such that the i-fold convolution of the cluster law puts
// positive mass on {m, m+1, ...}. Positivity is a support-membership
// question, so it is answered by exact boolean sumset reachability rather
// than a numeric threshold. Always terminates by i = m.
int index_I_m(const ClusterDistribution& pi, int m);

FragilityResult fd_limit(const ClusterDistribution& pi, int m);

// Conditional law of a compound Poisson count with total rate `rate`
// (the theta*tau product; only the product ever enters) and cluster law
// pi, given the count is at least m. The Panjer recursion is extended
// past the unconditional truncation point until the conditional law is
// resolved to relative accuracy tol, so arbitrarily small rates are
// handled.
PmfVector conditional_cp_law(double rate, const ClusterDistribution& pi, int m,
                             double tol = kDefaultTol);

// Total variation distance to the fd_limit law at each rate. Rates must
// be positive and strictly decreasing.
std::vector<std::pair<double, double>> fd_convergence_table(const ClusterDistribution& pi, int m,
                                                            const std::vector<double>& rates,
                                                            double tol = kDefaultTol);

}  // namespace fragdist
