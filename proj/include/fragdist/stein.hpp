#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fragdist/pmf.hpp"

namespace fragdist {

enum class SteinFamily { cond_poisson, cond_negbin, cond_compound_poisson };

SteinFamily stein_family_from_name(const std::string& name);  // poisson|negbin|cp
std::string stein_family_name(SteinFamily family);

// Per-family parameters: Poisson rate, NB(r, p), or cluster rates.
using SteinParams = std::variant<double, NegBinParams, CompoundPoissonParams>;

// Tabulated solution of a conditional Stein equation
//   sum_j c_j(i) g(i+j) - i g(i) 1{i>m} = 1_A(i) - E[1_A(W)],
// where W is the conditional target law on {m, m+1, ...} and the c_j are
// the family's birth coefficients. g is the bounded solution of the
// equations at i > m with the normalisation g(m) = 0; `g[i - m]` holds
// g(i) for i in [m, M]. The residual is the largest violation of the
// equation on [m, M - J], where every referenced value is tabulated.
// The i = m equation holds automatically for single-jump operators and
// for m = 0, and the residual there is round-off; for multi-jump
// operators with m >= 1 no bounded solution satisfies it, and the
// residual reports the intrinsic defect
//   (1/p_m) sum_{j>=2} c_j sum_{i=max(0,m-j+1)}^{m-1} p_i g(i+j)
// with p the unconditional target law.
struct SteinSolution {
    SteinFamily family = SteinFamily::cond_poisson;
    int m = 0;
    std::vector<int> target_set;
    int M = 0;
    std::vector<double> g;
    double residual = 0.0;

    double g_at(int i) const {
        const int idx = i - m;
        if (idx < 0 || idx >= static_cast<int>(g.size())) return 0.0;
        return g[static_cast<std::size_t>(idx)];
    }
};

struct SteinFactors {
    enum class Method { numeric, closed_form, bound };

    double G1 = 0.0;
    double G2 = 0.0;
    int m = 0;
    Method method = Method::numeric;
};

std::string stein_method_name(SteinFactors::Method method);

// M must be large enough that the target law's tail beyond M is below
// 1e-12, otherwise the solver fails with "truncation-too-small". The
// target set A must lie inside [m, M]. The compound Poisson solve also
// requires the size-weighted rate sum_j j*lambda_j to stay below ~30,
// where its back-substitution holds 1e-10 accuracy; it refuses larger
// rates with "out-of-range".
SteinSolution solve_stein_poisson(double lambda, int m, const std::vector<int>& A, int M);
SteinSolution solve_stein_nb(const NegBinParams& nb, int m, const std::vector<int>& A, int M);
SteinSolution solve_stein_cp(const CompoundPoissonParams& cp, int m, const std::vector<int>& A,
                             int M);

// Smallest truncation with tail mass below 1e-13 (at least m + 20).
int default_truncation(SteinFamily family, const SteinParams& params, int m);

// Suprema of |g(i+1)| and |g(i+1) - g(i)| over i in [m, M - J] and over
// all indicator test sets, computed by singleton decomposition and
// sign-splitting. M = 0 selects default_truncation. The difference at
// i = m uses the g(m) = 0 normalisation.
SteinFactors stein_factors_numeric(SteinFamily family, const SteinParams& params, int m,
                                   int M = 0);

// Reference factors: the exact G2 plus the G1 bound for the Poisson and
// NB families; for compound Poisson, the decreasing-rate bounds.
SteinFactors stein_factors_reference(SteinFamily family, const SteinParams& params, int m);

// Pr(Z > m) / (p (r+m) Pr(Z >= m)) for Z ~ NB(r, p).
double G_m2_nb_exact(const NegBinParams& nb, int m);

// Pr(P > m) / (lambda Pr(P >= m)) for P ~ Pn(lambda).
double G_m2_poisson_exact(double lambda, int m);

// 1 ^ sqrt(2 / (lambda e)).
double G_m1_poisson_bound(double lambda);

// 1/(1-p) ^ 1.75 / sqrt(r p (1-p)).
double G_m1_nb_bound(const NegBinParams& nb);

// Bounds for compound Poisson with i*lambda_i decreasing, returned as
// (G1 bound, G2 bound). Requires lambda1 >= 2 lambda2.
std::pair<double, double> G_m_cp_bounds(double lambda1, double lambda2);

// True when i * lambda_i is non-increasing over the full rate vector.
bool cluster_rates_decreasing(const std::vector<double>& lambdas);

// (eps1 G1 + eps2 G2) / Pr(W >= m): the conditional transfer bound.
double transfer_conditional_bound(double eps1, double eps2, double prob_W_ge_m, double G1,
                                  double G2);

struct MonotonicityRow {
    int m = 0;
    double G1 = 0.0;
    double G2 = 0.0;
};

struct MonotonicityTable {
    std::vector<MonotonicityRow> rows;
    bool monotone = true;  // false if any column increases by more than 1e-9
};

MonotonicityTable monotonicity_sweep(SteinFamily family, const SteinParams& params, int m_max,
                                     int M = 0);

}  // namespace fragdist
