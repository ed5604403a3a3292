#include "fragdist/stein.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fragdist/error.hpp"

namespace fragdist {

namespace {

constexpr double kTailPrecondition = 1e-12;  // required tail mass beyond M
constexpr double kAutoTail = 1e-13;          // default_truncation target
constexpr double kWeightFloor = 1e-290;      // stop tabulating underflowing weights

// Birth side of the Stein operator. The conditional Poisson and compound
// Poisson operators have constant jump coefficients j*lambda_j; the NB
// operator has the state-dependent single-jump coefficient p(r+i).
struct BirthSpec {
    std::vector<double> jlam;  // constant coefficients, jlam[j-1] on g(i+j)
    bool state_dependent = false;
    double nb_r = 0.0;
    double nb_p = 0.0;

    int jumps() const { return state_dependent ? 1 : static_cast<int>(jlam.size()); }

    double coeff(int j, int i) const {
        if (state_dependent) return nb_p * (nb_r + i);
        return jlam[static_cast<std::size_t>(j - 1)];
    }

    double total(int i) const {
        if (state_dependent) return nb_p * (nb_r + i);
        double s = 0.0;
        for (double v : jlam) s += v;
        return s;
    }
};

// Weights of the unconditional target law on [0, w_end] plus a bound on
// the mass beyond. Everything the solver needs about the law.
struct LawTable {
    std::vector<double> w;
    double beyond = 0.0;  // upper bound on P(Z > w_end)

    int w_end() const { return static_cast<int>(w.size()) - 1; }

    double at(int k) const {
        if (k < 0 || k > w_end()) return 0.0;
        return w[static_cast<std::size_t>(k)];
    }

    // P(Z > M), using the stored weights and the beyond-bound.
    double tail_after(int M) const {
        double s = beyond;
        for (int k = w_end(); k > M; --k) s += w[static_cast<std::size_t>(k)];
        return s;
    }
};

LawTable tabulate_poisson(double lambda, int upto) {
    LawTable law;
    law.w.push_back(std::exp(-lambda));
    for (int k = 0; k < upto; ++k) {
        const double next = law.w.back() * lambda / (k + 1);
        if (next < kWeightFloor && k > lambda) break;
        law.w.push_back(next);
    }
    // Every step ratio past w_end is at most lambda / (w_end + 1).
    const double ratio = lambda / static_cast<double>(law.w.size());
    law.beyond = ratio < 1.0 ? law.w.back() * ratio / (1.0 - ratio) : 1.0;
    return law;
}

LawTable tabulate_nb(const NegBinParams& nb, int upto) {
    LawTable law;
    law.w.push_back(std::exp(nb.r * std::log1p(-nb.p)));
    for (int k = 0; k < upto; ++k) {
        const double next = law.w.back() * nb.p * (nb.r + k) / (k + 1);
        if (next < kWeightFloor && k > nb.r * nb.p / (1.0 - nb.p)) break;
        law.w.push_back(next);
    }
    // p (r+k)/(k+1) is monotone in k toward p, so the supremum past w_end
    // is attained either at the first step or in the limit.
    const double e = static_cast<double>(law.w.size() - 1);
    const double ratio = nb.p * std::max((nb.r + e) / (e + 1.0), 1.0);
    law.beyond = ratio < 1.0 ? law.w.back() * ratio / (1.0 - ratio) : 1.0;
    return law;
}

// Past w_end, p_n <= (sum_j j lambda_j / n) * (window max), so window
// maxima contract by rho per J steps and the remaining mass is below
// J * window * rho / (1 - rho).
double cp_window_bound(const std::vector<double>& w, double jlam_total, int J) {
    double window = 0.0;
    for (int j = 0; j < std::min<int>(J, static_cast<int>(w.size())); ++j)
        window = std::max(window, w[w.size() - 1 - static_cast<std::size_t>(j)]);
    const double rho = jlam_total / static_cast<double>(w.size());
    if (!(rho < 1.0)) return 1.0;
    return J * window * rho / (1.0 - rho);
}

LawTable tabulate_cp(const CompoundPoissonParams& cp, int upto) {
    const std::vector<double> jlam = detail::size_weighted_rates(cp.lambdas);
    const int J = static_cast<int>(jlam.size());
    double jlam_total = 0.0;
    for (double v : jlam) jlam_total += v;
    LawTable law;
    law.w.push_back(std::exp(-cp.total()));
    for (int k = 0; k < upto; ++k) law.w.push_back(detail::panjer_step(jlam, law.w));
    law.beyond = cp_window_bound(law.w, jlam_total, J);
    return law;
}

struct Engine {
    SteinFamily family;
    BirthSpec spec;
    int m = 0;
    int M = 0;      // reported truncation
    int M_int = 0;  // internal grid end; closure g = 0 applies past here
    LawTable law;
    double p_ge_m = 0.0;

    double nu(int k) const { return law.at(k) / p_ge_m; }

    double h_at(int i, const std::vector<char>& in_A, double ef) const {
        const double f_i = (i <= M && in_A[static_cast<std::size_t>(i)]) ? 1.0 : 0.0;
        return f_i - ef;
    }

    // Solution of the i > m equations with g(m) = 0, tabulated on
    // [m, M_int].
    std::vector<double> solve(const std::vector<char>& in_A, double ef) const {
        return spec.jumps() == 1 ? solve_single_jump(in_A, ef) : solve_multi_jump(in_A, ef);
    }

    // Single-jump operators have the stationary measure w as an exact
    // integrating factor:
    //     g(i+1) = sum_{k=m..i} w_k h(k) / (beta(i) w_i)
    //            = -sum_{k>i} w_k h(k) / (beta(i) w_i),
    // the two forms agreeing because h is centred. Evaluating the smaller
    // sum keeps the computation stable on both sides of the bulk for any
    // admissible rate.
    std::vector<double> solve_single_jump(const std::vector<char>& in_A, double ef) const {
        std::vector<double> g(static_cast<std::size_t>(M_int - m + 1), 0.0);
        const int top = std::min(M_int - 1, law.w_end());

        double suffix_w = law.beyond;  // sum of w over (top, infinity)
        double suffix_h = -ef * law.beyond;
        for (int k = law.w_end(); k > top; --k) {
            suffix_w += law.at(k);
            suffix_h += law.at(k) * h_at(k, in_A, ef);
        }
        std::vector<double> tail_h(static_cast<std::size_t>(top - m + 2), 0.0);
        std::vector<double> tail_w(static_cast<std::size_t>(top - m + 2), 0.0);
        tail_h[static_cast<std::size_t>(top - m + 1)] = suffix_h;
        tail_w[static_cast<std::size_t>(top - m + 1)] = suffix_w;
        for (int k = top; k > m; --k) {
            tail_h[static_cast<std::size_t>(k - m)] =
                tail_h[static_cast<std::size_t>(k - m + 1)] + law.at(k) * h_at(k, in_A, ef);
            tail_w[static_cast<std::size_t>(k - m)] =
                tail_w[static_cast<std::size_t>(k - m + 1)] + law.at(k);
        }

        double prefix_h = 0.0;
        double prefix_w = 0.0;
        for (int i = m; i <= top; ++i) {
            prefix_h += law.at(i) * h_at(i, in_A, ef);
            prefix_w += law.at(i);
            const double scale = spec.coeff(1, i) * law.at(i);
            const double numer = prefix_w <= tail_w[static_cast<std::size_t>(i - m + 1)]
                                     ? prefix_h
                                     : -tail_h[static_cast<std::size_t>(i - m + 1)];
            g[static_cast<std::size_t>(i - m + 1)] = numer / scale;
        }
        return g;
    }

    // Multi-jump operators have no integrating factor; the truncated
    // system (equations i in (m, M_int], closure past M_int) is upper
    // triangular and solved by back-substitution from the tail. Rounding
    // seeded near the bulk of the law amplifies by ~mean/i per step below
    // it, so the arithmetic runs in extended precision and make_engine
    // refuses rates whose amplification would exceed the accuracy target
    // (see multi_jump_amplification).
    std::vector<double> solve_multi_jump(const std::vector<char>& in_A, double ef) const {
        const int J = spec.jumps();
        std::vector<long double> g(static_cast<std::size_t>(M_int - m + 1), 0.0L);
        auto g_at = [&](int i) {
            const int idx = i - m;
            return idx <= M_int - m ? g[static_cast<std::size_t>(idx)] : 0.0L;
        };
        for (int i = M_int; i > m; --i) {
            long double acc = 0.0L;
            for (int j = 1; j <= J; ++j)
                if (i + j <= M_int) acc += static_cast<long double>(spec.coeff(j, i)) * g_at(i + j);
            g[static_cast<std::size_t>(i - m)] = (acc - h_at(i, in_A, ef)) / i;
        }
        return std::vector<double>(g.begin(), g.end());
    }

    double residual(const std::vector<double>& g, const std::vector<char>& in_A,
                    double ef) const {
        const int J = spec.jumps();
        auto g_at = [&](int i) {
            const int idx = i - m;
            return (idx >= 0 && idx <= M_int - m) ? g[static_cast<std::size_t>(idx)] : 0.0;
        };
        double worst = 0.0;
        for (int i = m; i <= M - J; ++i) {
            double lhs = 0.0;
            for (int j = 1; j <= J; ++j) lhs += spec.coeff(j, i) * g_at(i + j);
            if (i > m) lhs -= static_cast<double>(i) * g_at(i);
            const double f_i = in_A[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(lhs - (f_i - ef)));
        }
        return worst;
    }
};

// Extension past M so that the closure error has decayed to round-off by
// the time the backward recursion re-enters the reported range. Backward
// error contracts by total_birth(i)/i per step.
int extended_grid(const BirthSpec& spec, int M) {
    double shrink = 1.0;
    int i = M + 1;
    while (shrink > 1e-17 && i < M + 20000) {
        shrink *= std::min(1.0, spec.total(i) / i);
        ++i;
    }
    return i + spec.jumps();
}

// Worst-case growth of back-substitution rounding below the bulk: errors
// seeded at state i propagate downward multiplied by mean/i' for each
// i' < mean they pass.
double multi_jump_amplification(const BirthSpec& spec, int m) {
    const double mean = spec.total(0);
    double amp = 1.0;
    for (int i = m + 1; i < mean && amp < 1e300; ++i) amp *= mean / i;
    return amp;
}

Engine make_engine(SteinFamily family, const SteinParams& params, int m, int M) {
    if (m < 0) fail("invalid-parameter", "conditioning level m must be non-negative");

    Engine eng;
    eng.family = family;
    eng.m = m;
    eng.M = M;
    switch (family) {
        case SteinFamily::cond_poisson: {
            const double lambda = std::get<double>(params);
            if (!(lambda > 0.0) || !std::isfinite(lambda))
                fail("invalid-parameter", "Poisson rate must be positive");
            if (lambda > kLambdaCap) fail("out-of-range", "Poisson rate above underflow guard 500");
            eng.spec.jlam = {lambda};
            break;
        }
        case SteinFamily::cond_negbin: {
            const NegBinParams& nb = std::get<NegBinParams>(params);
            eng.spec.state_dependent = true;
            eng.spec.nb_r = nb.r;
            eng.spec.nb_p = nb.p;
            break;
        }
        case SteinFamily::cond_compound_poisson: {
            const CompoundPoissonParams& cp = std::get<CompoundPoissonParams>(params);
            if (cp.all_zero()) fail("invalid-parameter", "all cluster rates are zero");
            if (cp.total() > kLambdaCap)
                fail("out-of-range", "total cluster rate above underflow guard 500");
            eng.spec.jlam = detail::size_weighted_rates(cp.lambdas);
            break;
        }
    }

    const int J = eng.spec.jumps();
    if (M <= m + J) fail("truncation-too-small", "truncation M must exceed m + J");
    if (J > 1 && multi_jump_amplification(eng.spec, m) > 1e-7 / 5.4e-20)
        fail("out-of-range",
             "compound Poisson solve needs sum_j j*lambda_j below ~30: back-substitution "
             "cannot hold 1e-7 accuracy at this size-weighted rate");

    eng.M_int = extended_grid(eng.spec, M);
    const int tab_upto = eng.M_int + J + 1;
    switch (family) {
        case SteinFamily::cond_poisson:
            eng.law = tabulate_poisson(std::get<double>(params), tab_upto);
            break;
        case SteinFamily::cond_negbin:
            eng.law = tabulate_nb(std::get<NegBinParams>(params), tab_upto);
            break;
        case SteinFamily::cond_compound_poisson:
            eng.law = tabulate_cp(std::get<CompoundPoissonParams>(params), tab_upto);
            break;
    }

    if (eng.law.tail_after(M) >= kTailPrecondition)
        fail("truncation-too-small", "law tail beyond M is not below 1e-12");
    if (eng.law.w_end() < M)
        fail("out-of-range", "truncation M exceeds the representable support of the law");

    eng.p_ge_m = eng.law.beyond;
    for (int k = eng.law.w_end(); k >= m; --k) eng.p_ge_m += eng.law.at(k);
    if (!(eng.p_ge_m > 0.0))
        fail("conditioning-on-null-event", "target law puts no resolvable mass at or above m");
    return eng;
}

std::vector<char> set_mask(const std::vector<int>& A, int m, int M) {
    std::vector<char> mask(static_cast<std::size_t>(M + 1), 0);
    for (int a : A) {
        if (a < m || a > M)
            fail("invalid-parameter", "target set must lie inside [m, M]");
        mask[static_cast<std::size_t>(a)] = 1;
    }
    return mask;
}

SteinSolution finish_solution(const Engine& eng, SteinFamily family, const std::vector<int>& A) {
    const std::vector<char> mask = set_mask(A, eng.m, eng.M);
    double ef = 0.0;
    for (int a : A) ef += eng.nu(a);

    const std::vector<double> g_full = eng.solve(mask, ef);

    SteinSolution sol;
    sol.family = family;
    sol.m = eng.m;
    sol.target_set = A;
    sol.M = eng.M;
    sol.residual = eng.residual(g_full, mask, ef);
    sol.g.assign(g_full.begin(), g_full.begin() + (eng.M - eng.m + 1));
    return sol;
}

}  // namespace

SteinFamily stein_family_from_name(const std::string& name) {
    if (name == "poisson") return SteinFamily::cond_poisson;
    if (name == "negbin") return SteinFamily::cond_negbin;
    if (name == "cp") return SteinFamily::cond_compound_poisson;
    fail("invalid-parameter", "unknown Stein family '" + name + "'");
}

std::string stein_family_name(SteinFamily family) {
    switch (family) {
        case SteinFamily::cond_poisson: return "poisson";
        case SteinFamily::cond_negbin: return "negbin";
        case SteinFamily::cond_compound_poisson: return "cp";
    }
    return "?";
}

std::string stein_method_name(SteinFactors::Method method) {
    switch (method) {
        case SteinFactors::Method::numeric: return "numeric";
        case SteinFactors::Method::closed_form: return "closed_form";
        case SteinFactors::Method::bound: return "bound";
    }
    return "?";
}

SteinSolution solve_stein_poisson(double lambda, int m, const std::vector<int>& A, int M) {
    const Engine eng = make_engine(SteinFamily::cond_poisson, SteinParams{lambda}, m, M);
    return finish_solution(eng, SteinFamily::cond_poisson, A);
}

SteinSolution solve_stein_nb(const NegBinParams& nb, int m, const std::vector<int>& A, int M) {
    const Engine eng = make_engine(SteinFamily::cond_negbin, SteinParams{nb}, m, M);
    return finish_solution(eng, SteinFamily::cond_negbin, A);
}

SteinSolution solve_stein_cp(const CompoundPoissonParams& cp, int m, const std::vector<int>& A,
                             int M) {
    const Engine eng = make_engine(SteinFamily::cond_compound_poisson, SteinParams{cp}, m, M);
    return finish_solution(eng, SteinFamily::cond_compound_poisson, A);
}

int default_truncation(SteinFamily family, const SteinParams& params, int m) {
    LawTable law;
    switch (family) {
        case SteinFamily::cond_poisson: law = tabulate_poisson(std::get<double>(params), 400000); break;
        case SteinFamily::cond_negbin: law = tabulate_nb(std::get<NegBinParams>(params), 400000); break;
        case SteinFamily::cond_compound_poisson: {
            // Extend until the window bound clears the target.
            const CompoundPoissonParams& cp = std::get<CompoundPoissonParams>(params);
            const std::vector<double> jlam = detail::size_weighted_rates(cp.lambdas);
            const int J = static_cast<int>(jlam.size());
            double jlam_total = 0.0;
            for (double v : jlam) jlam_total += v;
            law.w.push_back(std::exp(-cp.total()));
            for (int n = 1; n < 400000; ++n) {
                law.w.push_back(detail::panjer_step(jlam, law.w));
                if (n >= J && cp_window_bound(law.w, jlam_total, J) < kAutoTail) break;
            }
            return std::max(static_cast<int>(law.w.size()) - 1, m + 20) + 2;
        }
    }
    int M = law.w_end();
    while (M > 0 && law.tail_after(M - 1) < kAutoTail) --M;
    return std::max(M, m + 20) + 2;
}

namespace {

SteinFactors assemble_factors(const Engine& eng) {
    const int m = eng.m;
    const int M = eng.M;
    const int J = eng.spec.jumps();
    const int top = M - J;  // suprema run over i in [m, top]

    const std::size_t span = static_cast<std::size_t>(top - m + 1);
    std::vector<double> g_pos(span, 0.0), g_neg(span, 0.0);
    std::vector<double> d_pos(span, 0.0), d_neg(span, 0.0);

    std::vector<char> mask(static_cast<std::size_t>(M + 1), 0);
    for (int k = m; k <= M; ++k) {
        mask[static_cast<std::size_t>(k)] = 1;
        const std::vector<double> g = eng.solve(mask, eng.nu(k));
        mask[static_cast<std::size_t>(k)] = 0;

        for (int i = m; i <= top; ++i) {
            const std::size_t at = static_cast<std::size_t>(i - m);
            const double gi1 = g[at + 1];
            const double diff = gi1 - g[at];
            if (gi1 > 0.0) g_pos[at] += gi1;
            else g_neg[at] -= gi1;
            if (diff > 0.0) d_pos[at] += diff;
            else d_neg[at] -= diff;
        }
    }

    SteinFactors factors;
    factors.m = m;
    factors.method = SteinFactors::Method::numeric;
    for (std::size_t at = 0; at < span; ++at) {
        factors.G1 = std::max({factors.G1, g_pos[at], g_neg[at]});
        factors.G2 = std::max({factors.G2, d_pos[at], d_neg[at]});
    }
    return factors;
}

}  // namespace

SteinFactors stein_factors_numeric(SteinFamily family, const SteinParams& params, int m, int M) {
    if (M == 0) M = default_truncation(family, params, m);
    const Engine eng = make_engine(family, params, m, M);
    return assemble_factors(eng);
}

SteinFactors stein_factors_reference(SteinFamily family, const SteinParams& params, int m) {
    SteinFactors factors;
    factors.m = m;
    switch (family) {
        case SteinFamily::cond_poisson: {
            const double lambda = std::get<double>(params);
            factors.G1 = G_m1_poisson_bound(lambda);
            factors.G2 = G_m2_poisson_exact(lambda, m);
            factors.method = SteinFactors::Method::closed_form;
            break;
        }
        case SteinFamily::cond_negbin: {
            const NegBinParams& nb = std::get<NegBinParams>(params);
            factors.G1 = G_m1_nb_bound(nb);
            factors.G2 = G_m2_nb_exact(nb, m);
            factors.method = SteinFactors::Method::closed_form;
            break;
        }
        case SteinFamily::cond_compound_poisson: {
            const CompoundPoissonParams& cp = std::get<CompoundPoissonParams>(params);
            if (!cluster_rates_decreasing(cp.lambdas))
                fail("precondition-violated", "CP factor bounds need i*lambda_i decreasing");
            const double l1 = cp.lambdas.empty() ? 0.0 : cp.lambdas[0];
            const double l2 = cp.lambdas.size() > 1 ? cp.lambdas[1] : 0.0;
            const auto [g1, g2] = G_m_cp_bounds(l1, l2);
            factors.G1 = g1;
            factors.G2 = g2;
            factors.method = SteinFactors::Method::bound;
            break;
        }
    }
    return factors;
}

double G_m2_poisson_exact(double lambda, int m) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        fail("invalid-parameter", "Poisson rate must be positive");
    if (lambda > kLambdaCap) fail("out-of-range", "Poisson rate above underflow guard 500");
    if (m < 0) fail("invalid-parameter", "m must be non-negative");

    // Upward tail sums: no cancellation even for tiny rates or deep m.
    const double w_m = std::exp(-lambda + m * std::log(lambda) - std::lgamma(m + 1.0));
    double term = w_m;
    double above = 0.0;  // P(Z > m)
    for (int k = m; k < 4'000'000; ++k) {
        term *= lambda / (k + 1);
        above += term;
        if (k > lambda && term < above * 1e-18) break;
    }
    return above / (lambda * (w_m + above));
}

double G_m2_nb_exact(const NegBinParams& nb, int m) {
    if (m < 0) fail("invalid-parameter", "m must be non-negative");

    const double log_wm = std::lgamma(nb.r + m) - std::lgamma(nb.r) - std::lgamma(m + 1.0) +
                          nb.r * std::log1p(-nb.p) + m * std::log(nb.p);
    const double w_m = std::exp(log_wm);
    double term = w_m;
    double above = 0.0;  // P(Z > m)
    const double mode = nb.r * nb.p / (1.0 - nb.p);
    for (int k = m; k < 4'000'000; ++k) {
        term *= nb.p * (nb.r + k) / (k + 1);
        above += term;
        if (k > mode && term < above * 1e-18) break;
    }
    return above / (nb.p * (nb.r + m) * (w_m + above));
}

double G_m1_poisson_bound(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        fail("invalid-parameter", "Poisson rate must be positive");
    return std::min(1.0, std::sqrt(2.0 / (lambda * std::exp(1.0))));
}

double G_m1_nb_bound(const NegBinParams& nb) {
    return std::min(1.0 / (1.0 - nb.p), 1.75 / std::sqrt(nb.r * nb.p * (1.0 - nb.p)));
}

std::pair<double, double> G_m_cp_bounds(double lambda1, double lambda2) {
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0))
        fail("invalid-parameter", "cluster rates must be non-negative");
    if (lambda1 < 2.0 * lambda2)
        fail("precondition-violated", "CP factor bounds need lambda1 >= 2*lambda2");

    const double d = lambda1 - 2.0 * lambda2;
    double g1 = 1.0;
    if (d > 1.0) {
        const double rd = 1.0 / std::sqrt(d);
        g1 = rd * (2.0 - rd);
    }
    double g2 = 1.0;
    if (d > 0.0) {
        const double logplus = std::max(0.0, std::log(2.0 * d));
        g2 = std::min(1.0, (1.0 / d) * (1.0 / (4.0 * d) + logplus));
    }
    return {g1, g2};
}

bool cluster_rates_decreasing(const std::vector<double>& lambdas) {
    for (std::size_t j = 0; j + 1 < lambdas.size(); ++j) {
        const double cur = static_cast<double>(j + 1) * lambdas[j];
        const double nxt = static_cast<double>(j + 2) * lambdas[j + 1];
        if (nxt > cur) return false;
    }
    return true;
}

double transfer_conditional_bound(double eps1, double eps2, double prob_W_ge_m, double G1,
                                  double G2) {
    if (!(eps1 >= 0.0) || !(eps2 >= 0.0) || !(G1 >= 0.0) || !(G2 >= 0.0))
        fail("invalid-parameter", "bound inputs must be non-negative");
    if (!(prob_W_ge_m > 0.0) || prob_W_ge_m > 1.0)
        fail("invalid-parameter", "Pr(W >= m) must lie in (0, 1]");
    return (eps1 * G1 + eps2 * G2) / prob_W_ge_m;
}

MonotonicityTable monotonicity_sweep(SteinFamily family, const SteinParams& params, int m_max,
                                     int M) {
    if (m_max < 0) fail("invalid-parameter", "m_max must be non-negative");
    if (M == 0) M = default_truncation(family, params, m_max);

    MonotonicityTable table;
    for (int m = 0; m <= m_max; ++m) {
        const SteinFactors f = stein_factors_numeric(family, params, m, M);
        table.rows.push_back({m, f.G1, f.G2});
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (table.rows[i].G1 > table.rows[i - 1].G1 + 1e-9 ||
            table.rows[i].G2 > table.rows[i - 1].G2 + 1e-9)
            table.monotone = false;
    }
    return table;
}

}  // namespace fragdist
