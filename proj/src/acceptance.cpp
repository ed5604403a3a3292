#include "fragdist/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "fragdist/counterexamples.hpp"
#include "fragdist/fragility.hpp"
#include "fragdist/json_io.hpp"
#include "fragdist/metrics.hpp"
#include "fragdist/models.hpp"
#include "fragdist/pmf.hpp"
#include "fragdist/stein.hpp"

namespace fragdist::acceptance {

namespace {

// Worst-case tracker: a criterion passes when its largest violation
// statistic stays at or below the stated tolerance.
struct Gauge {
    double worst = 0.0;
    std::string where;

    void observe(double value, const std::string& tag) {
        if (value > worst) {
            worst = value;
            where = tag;
        }
    }
};

std::string describe(const Gauge& gauge, double tolerance, const char* statistic) {
    std::ostringstream out;
    out << statistic << " " << format_sig(gauge.worst, 3) << " (tol " << format_sig(tolerance, 3)
        << ")";
    if (!gauge.where.empty()) out << " at " << gauge.where;
    return out.str();
}

CriterionResult finish(int id, const char* name, const Gauge& gauge, double tolerance,
                       const char* statistic) {
    return {id, name, gauge.worst <= tolerance, describe(gauge, tolerance, statistic)};
}

// Mass of `pmf` with every support point multiplied by `factor`.
PmfVector scale_support(const PmfVector& pmf, int factor) {
    PmfVector out;
    out.offset = pmf.offset * factor;
    out.tol = pmf.tol;
    out.tail_mass = pmf.tail_mass;
    out.probs.assign(static_cast<std::size_t>((pmf.size() - 1) * factor + 1), 0.0);
    for (int i = 0; i < pmf.size(); ++i)
        out.probs[static_cast<std::size_t>(i * factor)] = pmf.probs[static_cast<std::size_t>(i)];
    return out;
}

double pointwise_max_diff(const PmfVector& a, const PmfVector& b) {
    const int lo = std::min(a.offset, b.offset);
    const int hi = std::max(a.max_point(), b.max_point());
    double worst = 0.0;
    for (int k = lo; k <= hi; ++k) worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
    return worst;
}

std::string grid_tag(std::initializer_list<double> values) {
    std::ostringstream out;
    bool first = true;
    for (double v : values) {
        out << (first ? "" : ",") << format_sig(v, 6);
        first = false;
    }
    return out.str();
}

// --- 1. Panjer engine vs explicit convolution of scaled Poisson laws ---

CriterionResult criterion_cp_oracle() {
    const std::vector<std::vector<double>> grids = {
        {1.0},         {0.5, 0.25},          {2.0, 1.0, 0.5},      {1.5, 1.0, 0.3, 0.2},
        {0.3, 0, 0.7}, {0.25, 0.25, 0.25, 0.25}, {4.9},            {0.1, 0.1, 0.1, 4.0}};
    Gauge gauge;
    for (const auto& lambdas : grids) {
        const PmfVector fast = cp_pmf(CompoundPoissonParams(lambdas), 1e-13);
        PmfVector oracle = PmfVector::delta(0, 1e-14);
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
            if (lambdas[j] == 0.0) continue;
            oracle = convolve(oracle, scale_support(poisson_pmf(lambdas[j], 1e-14),
                                                    static_cast<int>(j + 1)));
        }
        gauge.observe(pointwise_max_diff(fast, oracle), "lambdas=(" + grid_tag({lambdas[0]}) + ",...)");
    }
    return finish(1, "compound Poisson engine vs convolution oracle", gauge, 1e-10,
                  "max pointwise diff");
}

// --- 2. Limit fragility distribution ---

CriterionResult criterion_fd_limit() {
    const std::vector<ClusterDistribution> pis = {ClusterDistribution({1.0}),
                                                  ClusterDistribution({0.5, 0.5}),
                                                  ClusterDistribution({0.6, 0.3, 0.1})};
    const std::vector<double> rates = {1e-2, 1e-3, 1e-4, 1e-5};
    Gauge gauge;  // scaled so that every sub-check passes iff worst <= 1
    for (std::size_t pidx = 0; pidx < pis.size(); ++pidx) {
        const ClusterDistribution& pi = pis[pidx];
        for (int m = 1; m <= 6; ++m) {
            const auto table = fd_convergence_table(pi, m, rates);
            const std::string tag = "pi#" + std::to_string(pidx) + ",m=" + std::to_string(m);
            gauge.observe(table.back().second / 1e-3, tag + " tv@1e-5");
            for (std::size_t i = 1; i < table.size(); ++i)
                gauge.observe(table[i].second <= table[i - 1].second ? 0.0 : 2.0,
                              tag + " not decreasing");
        }
        const FragilityResult fd1 = fd_limit(pi, 1);
        gauge.observe(pointwise_max_diff(fd1.law, pi.to_pmf()) / 1e-14,
                      "pi#" + std::to_string(pidx) + " fd_limit(pi,1)=pi");
    }
    return finish(2, "limit fragility distribution", gauge, 1.0, "worst scaled violation");
}

// --- 3. Exact NB G_{m,2} vs numeric supremum ---

CriterionResult criterion_nb_g2() {
    Gauge gauge;
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
        for (double p : {0.1, 0.3, 0.6}) {
            const NegBinParams nb(r, p);
            for (int m = 0; m <= 3; ++m) {
                const double numeric =
                    stein_factors_numeric(SteinFamily::cond_negbin, SteinParams{nb}, m).G2;
                const double exact = G_m2_nb_exact(nb, m);
                gauge.observe(std::abs(numeric - exact),
                              "r,p,m=" + grid_tag({r, p, static_cast<double>(m)}));
            }
        }
    }
    return finish(3, "exact negative binomial G_{m,2}", gauge, 1e-7, "max |numeric - closed|");
}

// --- 4. Conditional Poisson factors ---

CriterionResult criterion_poisson_factors() {
    Gauge gauge;  // scaled: every sub-check passes iff worst <= 1
    for (double lambda : {0.25, 1.0, 4.0}) {
        for (int m = 0; m <= 3; ++m) {
            const SteinFactors f =
                stein_factors_numeric(SteinFamily::cond_poisson, SteinParams{lambda}, m);
            const std::string tag = "lambda,m=" + grid_tag({lambda, static_cast<double>(m)});
            gauge.observe(std::abs(f.G2 - G_m2_poisson_exact(lambda, m)) / 1e-7, tag + " G2");
            gauge.observe(f.G1 <= G_m1_poisson_bound(lambda) ? 0.0 : 2.0, tag + " G1 bound");
        }
    }
    gauge.observe(std::abs(G_m2_poisson_exact(1e-3, 1) / 0.5 - 1.0) / 0.02,
                  "small-lambda limit of G_{1,2}");
    return finish(4, "conditional Poisson factors", gauge, 1.0, "worst scaled violation");
}

// --- 5. Monotonicity of the factors in m ---

CriterionResult criterion_monotonicity() {
    Gauge gauge;
    auto check = [&](SteinFamily family, const SteinParams& params, const std::string& tag) {
        const MonotonicityTable table = monotonicity_sweep(family, params, 5);
        for (std::size_t i = 1; i < table.rows.size(); ++i) {
            gauge.observe(table.rows[i].G1 - table.rows[i - 1].G1, tag + " G1");
            gauge.observe(table.rows[i].G2 - table.rows[i - 1].G2, tag + " G2");
        }
    };
    for (double lambda : {0.25, 1.0, 2.0, 4.0})
        check(SteinFamily::cond_poisson, SteinParams{lambda}, "poisson(" + format_sig(lambda, 4) + ")");
    for (double r : {0.5, 1.0, 2.0, 5.0})
        for (double p : {0.1, 0.3, 0.6})
            check(SteinFamily::cond_negbin, SteinParams{NegBinParams(r, p)},
                  "negbin(" + grid_tag({r, p}) + ")");
    check(SteinFamily::cond_compound_poisson,
          SteinParams{CompoundPoissonParams({1.0, 0.4, 0.1})}, "cp(1,0.4,0.1)");
    return finish(5, "factor monotonicity in m", gauge, 1e-9, "max increase");
}

// --- 6. Compound Poisson closed-form bounds dominate numeric factors ---

CriterionResult criterion_cp_bounds() {
    Gauge gauge;
    for (double l1 : {0.5, 2.0, 9.0}) {
        for (double frac : {0.0, 0.4, 0.9}) {
            const double l2 = frac * l1 / 2.0;
            const auto [b1, b2] = G_m_cp_bounds(l1, l2);
            for (int m = 0; m <= 2; ++m) {
                const CompoundPoissonParams cp(std::vector<double>{l1, l2});
                const SteinFactors f =
                    stein_factors_numeric(SteinFamily::cond_compound_poisson, SteinParams{cp}, m);
                const std::string tag = "l1,l2,m=" + grid_tag({l1, l2, static_cast<double>(m)});
                gauge.observe(f.G1 - b1, tag + " G1");
                gauge.observe(f.G2 - b2, tag + " G2");
            }
        }
    }
    return finish(6, "CP closed-form bounds dominate numeric factors", gauge, 0.0,
                  "max (numeric - bound)");
}

// --- 7-9. The three worked examples ---

CriterionResult criterion_example1() {
    Gauge gauge;
    for (int n : {5, 10, 50}) {
        for (double p : {0.005, 0.01, 0.05}) {
            const IndependentExceedanceModel model(std::vector<double>(static_cast<std::size_t>(n), p));
            const BoundReport report = verify_bound(ModelSpec{model}, canonical_approx(ModelSpec{model}));
            gauge.observe(report.holds ? 0.0 : 2.0,
                          "n,p=" + grid_tag({static_cast<double>(n), p}) + " bound violated");
        }
        const IndependentExceedanceModel tiny(std::vector<double>(static_cast<std::size_t>(n), 1e-4));
        const double ratio = example1_bound(tiny) / (1e-4 / 2.0);
        gauge.observe(std::abs(ratio - 1.0) / 0.02,
                      "n=" + std::to_string(n) + " asymptote p/2");
    }
    return finish(7, "independent exceedances: Poisson bound", gauge, 1.0,
                  "worst scaled violation");
}

CriterionResult criterion_example2() {
    Gauge gauge;
    // Transfer-matrix law against exhaustive enumeration. Configuration
    // weights come from power tables and buckets accumulate in extended
    // precision, keeping the oracle's own rounding well under the
    // comparison tolerance at n = 16.
    for (int n = 3; n <= 16; ++n) {
        for (double p : {0.1, 0.3, 0.5, 0.7}) {
            const PmfVector dp = tworuns_pmf(TwoRunsModel(n, p));
            std::vector<double> pow_p(static_cast<std::size_t>(n) + 1, 1.0);
            std::vector<double> pow_q(static_cast<std::size_t>(n) + 1, 1.0);
            for (int k = 1; k <= n; ++k) {
                pow_p[static_cast<std::size_t>(k)] = pow_p[static_cast<std::size_t>(k - 1)] * p;
                pow_q[static_cast<std::size_t>(k)] = pow_q[static_cast<std::size_t>(k - 1)] * (1.0 - p);
            }
            std::vector<long double> enumerated(static_cast<std::size_t>(n) + 1, 0.0L);
            for (unsigned cfg = 0; cfg < (1u << n); ++cfg) {
                int ones = 0;
                int pairs = 0;
                for (int i = 0; i < n; ++i) {
                    const bool yi = (cfg >> i) & 1u;
                    ones += yi ? 1 : 0;
                    pairs += (yi && ((cfg >> ((i + 1) % n)) & 1u)) ? 1 : 0;
                }
                enumerated[static_cast<std::size_t>(pairs)] +=
                    static_cast<long double>(pow_p[static_cast<std::size_t>(ones)]) *
                    pow_q[static_cast<std::size_t>(n - ones)];
            }
            double diff = 0.0;
            for (int k = 0; k <= n; ++k)
                diff = std::max(diff, std::abs(dp.at(k) - static_cast<double>(
                                                              enumerated[static_cast<std::size_t>(k)])));
            gauge.observe(diff / 1e-14, "enum n,p=" + grid_tag({static_cast<double>(n), p}));
        }
    }
    for (int n : {10, 20}) {
        for (double p : {0.01, 0.05}) {
            const TwoRunsModel model(n, p);
            const BoundReport report = verify_bound(ModelSpec{model}, canonical_approx(ModelSpec{model}));
            gauge.observe(report.holds ? 0.0 : 2.0,
                          "n,p=" + grid_tag({static_cast<double>(n), p}) + " bound violated");
        }
        const TwoRunsBound b = example2_bound(TwoRunsModel(n, 1e-3));
        gauge.observe(std::abs(b.bound / b.asymptotic - 1.0) / 0.05,
                      "n=" + std::to_string(n) + " asymptote");
    }
    return finish(8, "two-runs model: NB bound", gauge, 1.0, "worst scaled violation");
}

CriterionResult criterion_example3() {
    Gauge gauge;
    const int n = 10;
    const PmfVector base = conditional_truncate(zeroinflated_pmf(ZeroInflatedModel(n, 0.3, 0.5)), 1);
    for (double q : {0.1, 0.9}) {
        const PmfVector other = conditional_truncate(zeroinflated_pmf(ZeroInflatedModel(n, 0.3, q)), 1);
        gauge.observe(tv_distance(base, other).tv / 1e-14, "q-invariance q=" + format_sig(q, 3));
    }
    for (double p1 : {0.02, 0.1}) {
        for (double q : {0.3, 0.7}) {
            const ZeroInflatedModel model(n, p1, q);
            const BoundReport report = verify_bound(ModelSpec{model}, canonical_approx(ModelSpec{model}));
            gauge.observe(report.holds ? 0.0 : 2.0,
                          "p1,q=" + grid_tag({p1, q}) + " bound violated");
        }
    }
    const double ratio = example3_bound(ZeroInflatedModel(n, 1e-4, 0.5)) / (1e-4 / 2.0);
    gauge.observe(std::abs(ratio - 1.0) / 0.02, "asymptote p1/2");
    return finish(9, "zero-inflated model: conditional Poisson bound", gauge, 1.0,
                  "worst scaled violation");
}

// --- 10. Non-existence counterexamples ---

CriterionResult criterion_counterexamples() {
    Gauge gauge;
    const double s3 = std::sqrt(3.0);

    const OscillationReport r1 = oscillation_report(OscFunction::ratio_r1, 40);
    gauge.observe(std::abs(r1.limit_a - 1.0) / 1e-9, "r1 limit A");
    gauge.observe(std::abs(r1.limit_b - 2.0 / 3.0) / 1e-9, "r1 limit B");
    gauge.observe(std::abs(r1.gap - 1.0 / 3.0) / 1e-9, "r1 gap");

    const OscillationReport t2 = oscillation_report(OscFunction::trivariate_m2, 40);
    gauge.observe(std::abs(t2.limit_a - s3 / (1.0 + s3)) / 1e-9, "tri2 limit A");
    gauge.observe(std::abs(t2.limit_b - s3 / (2.0 / 3.0 + s3)) / 1e-9, "tri2 limit B");
    gauge.observe(std::abs(t2.gap - 0.0881) / 1e-4, "tri2 gap");

    const OscillationReport t1 = oscillation_report(OscFunction::trivariate_m1, 40);
    gauge.observe(t1.gap / 1e-9, "tri1 gap");

    const OscillationReport biv = oscillation_report(OscFunction::bivariate, 40);
    gauge.observe(std::abs(biv.gap - std::sqrt(2.0) / 2.0) / 1e-9, "biv gap");

    return finish(10, "non-existence counterexamples", gauge, 1.0, "worst scaled violation");
}

// --- 11. Monte Carlo consistency ---

CriterionResult criterion_monte_carlo() {
    struct Case {
        ModelSpec model;
        std::uint64_t seed;
        const char* tag;
    };
    const std::vector<Case> cases = {
        {ModelSpec{IndependentExceedanceModel({0.1, 0.2, 0.3, 0.05, 0.15})}, 20240205u, "independent"},
        {ModelSpec{TwoRunsModel(10, 0.3)}, 57721566u, "tworuns"},
        {ModelSpec{ZeroInflatedModel(10, 0.3, 0.5)}, 16180339u, "zeroinflated"},
    };
    const int draws = 1'000'000;

    Gauge gauge;
    for (const Case& c : cases) {
        const SampleBatch batch = sample(c.model, c.seed, draws);
        const PmfVector exact = conditional_truncate(model_pmf(c.model), 1);
        std::size_t retained = 0;
        for (int v : batch.counts)
            if (v >= 1) ++retained;
        const PmfVector empirical = conditional_empirical(batch.counts, 1);

        // Pointwise 3-sigma binomial bands over support points with at
        // least 5 expected retained samples; at most 1% may violate.
        int points = 0;
        int violations = 0;
        for (int k = exact.offset; k <= exact.max_point(); ++k) {
            const double q = exact.at(k);
            if (q * static_cast<double>(retained) < 5.0) continue;
            ++points;
            const double band = 3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(retained));
            if (std::abs(empirical.at(k) - q) > band) ++violations;
        }
        const double allowed = 0.01 * points;
        gauge.observe(violations <= allowed ? 0.0 : static_cast<double>(violations),
                      std::string(c.tag) + " (" + std::to_string(points) + " pts)");
    }
    return finish(11, "Monte Carlo consistency (1e6 seeded draws)", gauge, 0.0,
                  "band violations beyond 1%");
}

}  // namespace

std::vector<CriterionResult> run_all() {
    return {
        criterion_cp_oracle(),     criterion_fd_limit(),   criterion_nb_g2(),
        criterion_poisson_factors(), criterion_monotonicity(), criterion_cp_bounds(),
        criterion_example1(),      criterion_example2(),   criterion_example3(),
        criterion_counterexamples(), criterion_monte_carlo(),
    };
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace fragdist::acceptance
