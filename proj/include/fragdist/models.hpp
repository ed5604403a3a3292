#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "fragdist/pmf.hpp"

namespace fragdist {

// Independent exceedance indicators with per-site probabilities p_i.
struct IndependentExceedanceModel {
    std::vector<double> p;

    explicit IndependentExceedanceModel(std::vector<double> probs);
};

// Circular two-runs model: exceedances are X_i = Y_i ^ Y_{i+1} with
// Y_{n+1} := Y_1 and i.i.d. Pr(Y_i > s) = p, so the count is the number
// of adjacent pairs of exceeding Y's around the cycle.
struct TwoRunsModel {
    int n;
    double p;

    TwoRunsModel(int n_, double p_);
};

// Exceedances switched off entirely by a latent phase variable: given
// Theta = 1 (probability q), counts are Binomial(n, p1); given Theta = 0
// no exceedance happens.
struct ZeroInflatedModel {
    int n;
    double p1;
    double q;

    ZeroInflatedModel(int n_, double p1_, double q_);
};

using ModelSpec = std::variant<IndependentExceedanceModel, TwoRunsModel, ZeroInflatedModel>;

std::string model_name(const ModelSpec& model);

// i.i.d. draws of the exceedance count. Generation is fixed as
// std::mt19937_64 seeded directly with `seed`, with uniforms taken as
// (engine() >> 11) * 2^-53; identical seeds give identical batches on
// every platform.
struct SampleBatch {
    std::vector<int> counts;
    std::uint64_t seed = 0;
    std::string model;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 eng_;
};

// Exact law of the count for each model.
PmfVector poisson_binomial_pmf(const IndependentExceedanceModel& model);
PmfVector tworuns_pmf(const TwoRunsModel& model);
PmfVector zeroinflated_pmf(const ZeroInflatedModel& model);
PmfVector model_pmf(const ModelSpec& model);

SampleBatch sample(const ModelSpec& model, std::uint64_t seed, int count);

// Conditional approximation error bounds of the three worked examples,
// all at conditioning level m = 1.
//
// Independent sites: G_{1,2}(lambda) sum p_i^2 / (1 - prod(1 - p_i)) with
// lambda = sum p_i; asymptotically p/2 for identical small p.
double example1_bound(const IndependentExceedanceModel& model);

// Two-runs: NB(a/b, b) with b = (2p - 3p^2)/(1 + 2p - 3p^2) and
// a = (1 - b) n p^2; bound 32.2 p / sqrt((n-1)(1-p)^3) * a G_{1,2} / Pr(N >= 1)
// with the exact DP law in the denominator; asymptote drops the last
// factor as 1/2.
struct TwoRunsBound {
    double a = 0.0;
    double b = 0.0;
    double bound = 0.0;
    double asymptotic = 0.0;
};
TwoRunsBound example2_bound(const TwoRunsModel& model);

// Zero-inflated: G_{1,2}(lambda) n p1^2 / (1 - (1-p1)^n) with lambda = n p1.
// The phase probability q cancels from the conditional law and does not
// appear.
double example3_bound(const ZeroInflatedModel& model);

struct PoissonApprox {
    double lambda;
};
struct NegBinApprox {
    NegBinParams params;
};
struct CpApprox {
    CompoundPoissonParams params;
};
using ApproxSpec = std::variant<PoissonApprox, NegBinApprox, CpApprox>;

// The approximation each example pairs with its model.
ApproxSpec canonical_approx(const ModelSpec& model);

PmfVector approx_pmf(const ApproxSpec& approx, double tol = kDefaultTol);

// Exact conditional total variation distance against the approximating
// conditional law, compared with the model's paper bound.
struct BoundReport {
    std::string model;
    int m = 1;
    double exact_tv = 0.0;
    double paper_bound = 0.0;
    double ratio = 0.0;
    bool holds = false;
};
BoundReport verify_bound(const ModelSpec& model, const ApproxSpec& approx, int m = 1);

}  // namespace fragdist
