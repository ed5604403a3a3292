#include "fragdist/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fragdist/error.hpp"
#include "fragdist/metrics.hpp"
#include "fragdist/stein.hpp"

namespace fragdist {

namespace {

// Tolerance for exact finite DP constructions: round-off only, scaled to
// the number of folds so the mass-closure invariant has honest slack.
double dp_tol(int n) { return std::max(kDefaultTol, 40.0 * n * 2.22e-16); }

// Structurally impossible top counts leave exact zeros; drop them.
std::vector<double> trim_trailing_zeros(std::vector<double> probs) {
    while (probs.size() > 1 && probs.back() == 0.0) probs.pop_back();
    return probs;
}

}  // namespace

IndependentExceedanceModel::IndependentExceedanceModel(std::vector<double> probs)
    : p(std::move(probs)) {
    if (p.empty()) fail("invalid-parameter", "independent model needs n >= 1");
    if (p.size() > 100000) fail("out-of-range", "independent model capped at n = 1e5");
    for (double v : p)
        if (!(v >= 0.0) || !(v <= 1.0))
            fail("invalid-parameter", "exceedance probabilities must lie in [0, 1]");
}

TwoRunsModel::TwoRunsModel(int n_, double p_) : n(n_), p(p_) {
    if (n < 3) fail("invalid-parameter", "two-runs model needs n >= 3");
    if (n > 10000) fail("out-of-range", "two-runs model capped at n = 1e4");
    if (!(p > 0.0) || !(p < 1.0)) fail("invalid-parameter", "two-runs p must lie in (0, 1)");
}

ZeroInflatedModel::ZeroInflatedModel(int n_, double p1_, double q_) : n(n_), p1(p1_), q(q_) {
    if (n < 1) fail("invalid-parameter", "zero-inflated model needs n >= 1");
    if (n > 100000) fail("out-of-range", "zero-inflated model capped at n = 1e5");
    if (!(p1 > 0.0) || !(p1 < 1.0)) fail("invalid-parameter", "p1 must lie in (0, 1)");
    if (!(q > 0.0) || !(q <= 1.0)) fail("invalid-parameter", "q must lie in (0, 1]");
}

std::string model_name(const ModelSpec& model) {
    switch (model.index()) {
        case 0: return "independent";
        case 1: return "tworuns";
        case 2: return "zeroinflated";
    }
    return "?";
}

PmfVector poisson_binomial_pmf(const IndependentExceedanceModel& model) {
    const int n = static_cast<int>(model.p.size());
    std::vector<double> probs{1.0};
    probs.reserve(static_cast<std::size_t>(n) + 1);
    for (double pi : model.p) {
        probs.push_back(0.0);
        for (std::size_t k = probs.size() - 1; k > 0; --k)
            probs[k] = probs[k] * (1.0 - pi) + probs[k - 1] * pi;
        probs[0] *= 1.0 - pi;
    }
    return PmfVector{0, trim_trailing_zeros(std::move(probs)), 0.0, dp_tol(n)};
}

PmfVector tworuns_pmf(const TwoRunsModel& model) {
    const int n = model.n;
    const double w1 = model.p;
    const double w0 = 1.0 - model.p;

    std::vector<double> law(static_cast<std::size_t>(n) + 1, 0.0);
    // Condition on the first indicator, run the chain along the cycle
    // tracking (current indicator, adjacent pairs so far), then close the
    // cycle with the (Y_n, Y_1) pair.
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<double>> dp(2, std::vector<double>(width));
    std::vector<std::vector<double>> next(2, std::vector<double>(width));
    for (int b1 = 0; b1 <= 1; ++b1) {
        // dp[bit][c]: probability of the prefix with last indicator `bit`
        // and c adjacent pairs among positions 1..i.
        for (auto& row : dp) std::fill(row.begin(), row.end(), 0.0);
        dp[static_cast<std::size_t>(b1)][0] = (b1 == 1) ? w1 : w0;
        for (int i = 2; i <= n; ++i) {
            for (auto& row : next) std::fill(row.begin(), row.end(), 0.0);
            for (int prev = 0; prev <= 1; ++prev) {
                for (int c = 0; c <= i - 2; ++c) {
                    const double mass = dp[static_cast<std::size_t>(prev)][static_cast<std::size_t>(c)];
                    if (mass == 0.0) continue;
                    next[0][static_cast<std::size_t>(c)] += mass * w0;
                    next[1][static_cast<std::size_t>(c + (prev & 1))] += mass * w1;
                }
            }
            dp.swap(next);
        }
        for (int last = 0; last <= 1; ++last) {
            for (int c = 0; c <= n - 1; ++c) {
                const double mass = dp[static_cast<std::size_t>(last)][static_cast<std::size_t>(c)];
                if (mass == 0.0) continue;
                law[static_cast<std::size_t>(c + (last & b1))] += mass;
            }
        }
    }
    return PmfVector{0, trim_trailing_zeros(std::move(law)), 0.0, dp_tol(n)};
}

PmfVector zeroinflated_pmf(const ZeroInflatedModel& model) {
    PmfVector binom =
        poisson_binomial_pmf(IndependentExceedanceModel(std::vector<double>(
            static_cast<std::size_t>(model.n), model.p1)));
    for (double& v : binom.probs) v *= model.q;
    binom.probs[0] += 1.0 - model.q;
    return binom;
}

PmfVector model_pmf(const ModelSpec& model) {
    return std::visit(
        [](const auto& m) -> PmfVector {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, IndependentExceedanceModel>)
                return poisson_binomial_pmf(m);
            else if constexpr (std::is_same_v<T, TwoRunsModel>)
                return tworuns_pmf(m);
            else
                return zeroinflated_pmf(m);
        },
        model);
}

SampleBatch sample(const ModelSpec& model, std::uint64_t seed, int count) {
    if (count < 1) fail("invalid-parameter", "sample count must be at least 1");

    SampleBatch batch;
    batch.seed = seed;
    batch.model = model_name(model);
    batch.counts.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);

    if (const auto* im = std::get_if<IndependentExceedanceModel>(&model)) {
        for (int t = 0; t < count; ++t) {
            int c = 0;
            for (double pi : im->p) c += rng.bernoulli(pi) ? 1 : 0;
            batch.counts.push_back(c);
        }
    } else if (const auto* tr = std::get_if<TwoRunsModel>(&model)) {
        // Simulates the Y sequence directly; this is the independent
        // check on the transfer-matrix law.
        std::vector<char> y(static_cast<std::size_t>(tr->n));
        for (int t = 0; t < count; ++t) {
            for (int i = 0; i < tr->n; ++i) y[static_cast<std::size_t>(i)] = rng.bernoulli(tr->p);
            int c = 0;
            for (int i = 0; i < tr->n; ++i)
                c += (y[static_cast<std::size_t>(i)] && y[static_cast<std::size_t>((i + 1) % tr->n)]) ? 1 : 0;
            batch.counts.push_back(c);
        }
    } else {
        const auto& zi = std::get<ZeroInflatedModel>(model);
        for (int t = 0; t < count; ++t) {
            int c = 0;
            if (rng.bernoulli(zi.q)) {
                for (int i = 0; i < zi.n; ++i) c += rng.bernoulli(zi.p1) ? 1 : 0;
            }
            batch.counts.push_back(c);
        }
    }
    return batch;
}

double example1_bound(const IndependentExceedanceModel& model) {
    double lambda = 0.0;
    double sum_sq = 0.0;
    double log_none = 0.0;
    for (double pi : model.p) {
        lambda += pi;
        sum_sq += pi * pi;
        log_none += std::log1p(-pi);
    }
    if (!(lambda > 0.0)) fail("invalid-parameter", "all exceedance probabilities are zero");
    const double p_ge_1 = -std::expm1(log_none);  // 1 - prod(1 - p_i)
    return G_m2_poisson_exact(lambda, 1) * sum_sq / p_ge_1;
}

TwoRunsBound example2_bound(const TwoRunsModel& model) {
    const double p = model.p;
    const double n = model.n;
    // b = p(2 - 3p)/(1 + ...) must be positive for NB(a/b, b) to exist.
    if (p >= 2.0 / 3.0)
        fail("invalid-parameter", "two-runs NB approximation needs p < 2/3");

    TwoRunsBound out;
    out.b = (2.0 * p - 3.0 * p * p) / (1.0 + 2.0 * p - 3.0 * p * p);
    out.a = (1.0 - out.b) * n * p * p;
    const double g12 = G_m2_nb_exact(NegBinParams(out.a / out.b, out.b), 1);
    const double p_ge_1 = tworuns_pmf(model).mass_from(1);
    const double front = 32.2 * p / std::sqrt((n - 1.0) * std::pow(1.0 - p, 3.0));
    out.bound = front * out.a * g12 / p_ge_1;
    out.asymptotic = 0.5 * front;
    return out;
}

double example3_bound(const ZeroInflatedModel& model) {
    // G_{1,2}(lambda) n p1^2 / (1 - (1-p1)^n), the transfer-lemma form;
    // q does not enter because the conditional law is q-free.
    const double lambda = model.n * model.p1;
    const double p_ge_1 = -std::expm1(model.n * std::log1p(-model.p1));
    return G_m2_poisson_exact(lambda, 1) * model.n * model.p1 * model.p1 / p_ge_1;
}

ApproxSpec canonical_approx(const ModelSpec& model) {
    if (const auto* im = std::get_if<IndependentExceedanceModel>(&model)) {
        double lambda = 0.0;
        for (double pi : im->p) lambda += pi;
        return PoissonApprox{lambda};
    }
    if (const auto* tr = std::get_if<TwoRunsModel>(&model)) {
        const TwoRunsBound b = example2_bound(*tr);
        return NegBinApprox{NegBinParams(b.a / b.b, b.b)};
    }
    const auto& zi = std::get<ZeroInflatedModel>(model);
    return PoissonApprox{static_cast<double>(zi.n) * zi.p1};
}

PmfVector approx_pmf(const ApproxSpec& approx, double tol) {
    if (const auto* pa = std::get_if<PoissonApprox>(&approx)) return poisson_pmf(pa->lambda, tol);
    if (const auto* na = std::get_if<NegBinApprox>(&approx)) return nb_pmf(na->params, tol);
    return cp_pmf(std::get<CpApprox>(approx).params, tol);
}

BoundReport verify_bound(const ModelSpec& model, const ApproxSpec& approx, int m) {
    BoundReport report;
    report.model = model_name(model);
    report.m = m;

    const PmfVector exact_cond = conditional_truncate(model_pmf(model), m);
    const PmfVector approx_cond = conditional_truncate(approx_pmf(approx, 1e-13), m);
    report.exact_tv = tv_distance(exact_cond, approx_cond).tv;

    if (const auto* im = std::get_if<IndependentExceedanceModel>(&model))
        report.paper_bound = example1_bound(*im);
    else if (const auto* tr = std::get_if<TwoRunsModel>(&model))
        report.paper_bound = example2_bound(*tr).bound;
    else
        report.paper_bound = example3_bound(std::get<ZeroInflatedModel>(model));

    report.ratio = report.exact_tv / report.paper_bound;
    report.holds = report.exact_tv <= report.paper_bound;
    return report;
}

}  // namespace fragdist
