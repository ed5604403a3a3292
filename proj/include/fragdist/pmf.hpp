#pragma once

#include <vector>

namespace fragdist {

// Construction tolerance used when the caller does not override it. All
// truncation is tail-mass based, never fixed-length.
inline constexpr double kDefaultTol = 1e-12;

// Rate guard: exp(-500) is still a normal double with two orders of
// magnitude to spare before underflow.
inline constexpr double kLambdaCap = 500.0;

// Finitely supported probability mass function on the non-negative
// integers. `probs[k]` is the mass at `offset + k`; `tail_mass` accounts
// for the probability beyond the last stored point so that downstream
// conditioning can detect when a requested event lies in the discarded
// tail. Values are immutable after construction in every library code
// path, so sharing across threads needs no synchronisation.
struct PmfVector {
    int offset = 0;
    std::vector<double> probs;
    double tail_mass = 0.0;
    double tol = kDefaultTol;

    int size() const { return static_cast<int>(probs.size()); }
    int max_point() const { return offset + size() - 1; }

    // Mass at absolute support point k; 0 outside the stored range.
    double at(int k) const {
        const int idx = k - offset;
        if (idx < 0 || idx >= size()) return 0.0;
        return probs[static_cast<std::size_t>(idx)];
    }

    double sum() const;            // sum of stored masses
    double mass_from(int m) const; // P(X >= m), tail_mass included

    // Checks non-negativity and |1 - (sum + tail_mass)| <= 10 * tol.
    void validate() const;

    static PmfVector delta(int k, double tol = kDefaultTol);
};

// Distribution of the size of an exceedance cluster: pi[i-1] is the
// probability of size i, i = 1..J. Construction validates (entries
// non-negative, total within 1e-12 of one) and then renormalises exactly
// so that downstream restrictions reproduce the stored entries to
// round-off.
struct ClusterDistribution {
    std::vector<double> pi;

    explicit ClusterDistribution(std::vector<double> weights);

    int max_size() const { return static_cast<int>(pi.size()); }
    PmfVector to_pmf() const;  // offset 1, exact (zero tail mass)
};

// Rates lambda[j-1] of size-j clusters. The total rate is the Poisson
// rate of the cluster count; pi_j = lambda_j / total is the cluster
// distribution.
struct CompoundPoissonParams {
    std::vector<double> lambdas;

    explicit CompoundPoissonParams(std::vector<double> ls);

    double total() const;
    bool all_zero() const;
    ClusterDistribution cluster() const;  // requires total() > 0
};

struct NegBinParams {
    double r;
    double p;

    NegBinParams(double r_, double p_);
};

// Pn(lambda) truncated once the cumulative mass reaches 1 - tol.
PmfVector poisson_pmf(double lambda, double tol = kDefaultTol);

// NB(r, p) with mass function Gamma(r+k)/(Gamma(r) k!) (1-p)^r p^k,
// evaluated through the multiplicative recurrence
// (k+1) probs[k+1] = p (r+k) probs[k].
PmfVector nb_pmf(const NegBinParams& nb, double tol = kDefaultTol);

// Law of sum_j j K_j with independent K_j ~ Pn(lambda_j), via the Panjer
// recursion p_n = (1/n) sum_j j lambda_j p_{n-j}. All-zero rates give the
// point mass at 0.
PmfVector cp_pmf(const CompoundPoissonParams& cp, double tol = kDefaultTol);

// Law of X given X >= m. Errors with "conditioning-on-null-event" when
// P(X >= m) is not resolved above the truncation tail of the input.
PmfVector conditional_truncate(const PmfVector& pmf, int m);

// Exact discrete convolution; offsets add, tail masses combine as the
// conservative upper bound tail_a + tail_b.
PmfVector convolve(const PmfVector& a, const PmfVector& b);

// j-fold self-convolution of the cluster law. j = 0 returns the point
// mass at 0 (empty-sum convention).
PmfVector convolve_power(const ClusterDistribution& pi, int j);

namespace detail {

// One Panjer step: with masses = (p_0, ..., p_{n-1}) already computed,
// returns p_n = (1/n) sum_{j=1}^{min(n,J)} jlam[j-1] p_{n-j} where
// jlam[j-1] = j * lambda_j.
double panjer_step(const std::vector<double>& jlam, const std::vector<double>& masses);

std::vector<double> size_weighted_rates(const std::vector<double>& lambdas);

}  // namespace detail

}  // namespace fragdist
