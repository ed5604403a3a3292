#include "fragdist/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "fragdist/error.hpp"

namespace fragdist {

namespace {

// Hard cap on recursion length; the tail-mass stopping rules terminate
// far earlier for every rate the lambda cap admits.
constexpr int kMaxSupport = 4'000'000;

}  // namespace

double PmfVector::sum() const {
    double s = 0.0;
    for (double v : probs) s += v;
    return s;
}

double PmfVector::mass_from(int m) const {
    double s = tail_mass;
    const int start = std::max(m - offset, 0);
    for (int i = size() - 1; i >= start; --i) s += probs[static_cast<std::size_t>(i)];
    return s;
}

void PmfVector::validate() const {
    if (offset < 0) fail("invalid-parameter", "pmf offset must be non-negative");
    if (probs.empty()) fail("invalid-parameter", "pmf has empty support");
    if (!(tol > 0.0) || !(tol < 1.0)) fail("invalid-parameter", "pmf tol must lie in (0, 1)");
    if (tail_mass < 0.0 || !std::isfinite(tail_mass))
        fail("invalid-parameter", "pmf tail mass must be finite and non-negative");
    for (double v : probs) {
        if (v < 0.0 || !std::isfinite(v))
            fail("invalid-parameter", "pmf entries must be finite and non-negative");
    }
    const double total = sum() + tail_mass;
    if (std::abs(total - 1.0) > 10.0 * tol)
        fail("invalid-parameter",
             "pmf mass " + std::to_string(total) + " is not within 10*tol of 1");
}

PmfVector PmfVector::delta(int k, double tol) {
    if (k < 0) fail("invalid-parameter", "point mass below 0");
    return PmfVector{k, {1.0}, 0.0, tol};
}

ClusterDistribution::ClusterDistribution(std::vector<double> weights) : pi(std::move(weights)) {
    if (pi.empty()) fail("invalid-parameter", "cluster distribution needs J >= 1");
    double s = 0.0;
    for (double v : pi) {
        if (v < 0.0 || !std::isfinite(v))
            fail("invalid-parameter", "cluster probabilities must be finite and non-negative");
        s += v;
    }
    if (std::abs(s - 1.0) > 1e-12)
        fail("invalid-parameter", "cluster probabilities must sum to 1 within 1e-12");
    for (double& v : pi) v /= s;
}

PmfVector ClusterDistribution::to_pmf() const {
    return PmfVector{1, pi, 0.0, kDefaultTol};
}

CompoundPoissonParams::CompoundPoissonParams(std::vector<double> ls) : lambdas(std::move(ls)) {
    for (double v : lambdas) {
        if (v < 0.0 || !std::isfinite(v))
            fail("invalid-parameter", "cluster rates must be finite and non-negative");
    }
}

double CompoundPoissonParams::total() const {
    double s = 0.0;
    for (double v : lambdas) s += v;
    return s;
}

bool CompoundPoissonParams::all_zero() const {
    for (double v : lambdas)
        if (v > 0.0) return false;
    return true;
}

ClusterDistribution CompoundPoissonParams::cluster() const {
    const double t = total();
    if (!(t > 0.0)) fail("invalid-parameter", "cluster distribution undefined for zero total rate");
    std::vector<double> pi(lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j) pi[j] = lambdas[j] / t;
    return ClusterDistribution(std::move(pi));
}

NegBinParams::NegBinParams(double r_, double p_) : r(r_), p(p_) {
    if (!(r > 0.0) || !std::isfinite(r)) fail("invalid-parameter", "negative binomial needs r > 0");
    if (!(p > 0.0) || !(p < 1.0)) fail("invalid-parameter", "negative binomial needs p in (0, 1)");
}

PmfVector poisson_pmf(double lambda, double tol) {
    if (!std::isfinite(lambda) || lambda < 0.0)
        fail("invalid-parameter", "Poisson rate must be finite and non-negative");
    if (!(tol > 0.0) || !(tol < 1.0)) fail("invalid-parameter", "tol must lie in (0, 1)");
    if (lambda > kLambdaCap) fail("out-of-range", "Poisson rate above underflow guard 500");
    if (lambda == 0.0) return PmfVector::delta(0, tol);

    PmfVector out;
    out.tol = tol;
    double term = std::exp(-lambda);
    double cum = 0.0;
    for (int k = 0; k < kMaxSupport; ++k) {
        out.probs.push_back(term);
        cum += term;
        if (cum >= 1.0 - tol) break;
        term *= lambda / (k + 1);
    }
    out.tail_mass = std::max(0.0, 1.0 - cum);
    return out;
}

PmfVector nb_pmf(const NegBinParams& nb, double tol) {
    if (!(tol > 0.0) || !(tol < 1.0)) fail("invalid-parameter", "tol must lie in (0, 1)");

    PmfVector out;
    out.tol = tol;
    double term = std::exp(nb.r * std::log1p(-nb.p));  // (1-p)^r, stable for small r or p
    double cum = 0.0;
    for (int k = 0; k < kMaxSupport; ++k) {
        out.probs.push_back(term);
        cum += term;
        if (cum >= 1.0 - tol) break;
        term *= nb.p * (nb.r + k) / (k + 1);
    }
    out.tail_mass = std::max(0.0, 1.0 - cum);
    return out;
}

namespace detail {

double panjer_step(const std::vector<double>& jlam, const std::vector<double>& masses) {
    const int n = static_cast<int>(masses.size());
    const int jmax = std::min<int>(n, static_cast<int>(jlam.size()));
    double acc = 0.0;
    for (int j = 1; j <= jmax; ++j)
        acc += jlam[static_cast<std::size_t>(j - 1)] * masses[static_cast<std::size_t>(n - j)];
    return acc / n;
}

std::vector<double> size_weighted_rates(const std::vector<double>& lambdas) {
    std::vector<double> jlam(lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j)
        jlam[j] = static_cast<double>(j + 1) * lambdas[j];
    return jlam;
}

}  // namespace detail

PmfVector cp_pmf(const CompoundPoissonParams& cp, double tol) {
    if (!(tol > 0.0) || !(tol < 1.0)) fail("invalid-parameter", "tol must lie in (0, 1)");
    if (cp.all_zero()) return PmfVector::delta(0, tol);
    const double total = cp.total();
    if (total > kLambdaCap) fail("out-of-range", "total cluster rate above underflow guard 500");

    const std::vector<double> jlam = detail::size_weighted_rates(cp.lambdas);

    PmfVector out;
    out.tol = tol;
    out.probs.push_back(std::exp(-total));
    double cum = out.probs[0];
    while (cum < 1.0 - tol) {
        if (out.size() >= kMaxSupport)
            fail("truncation-too-small", "Panjer recursion exceeded the support cap");
        const double p = detail::panjer_step(jlam, out.probs);
        out.probs.push_back(p);
        cum += p;
    }
    out.tail_mass = std::max(0.0, 1.0 - cum);
    return out;
}

PmfVector conditional_truncate(const PmfVector& pmf, int m) {
    pmf.validate();
    if (m < 0) fail("invalid-parameter", "conditioning level m must be non-negative");

    const double denom = pmf.mass_from(m);
    // The event {X >= m} must be resolved above the unaccounted tail,
    // otherwise the conditional law would be made of truncation error.
    if (!(denom > 10.0 * pmf.tail_mass) || denom <= 0.0)
        fail("conditioning-on-null-event",
             "P(X >= m) is not resolved above the truncated tail");

    int start = std::max(pmf.offset, m);
    // Drop structurally impossible leading points of the restriction.
    while (start < pmf.max_point() && pmf.at(start) == 0.0) ++start;

    PmfVector out;
    out.offset = start;
    out.tol = pmf.tol;
    out.probs.reserve(static_cast<std::size_t>(pmf.max_point() - start + 1));
    for (int k = start; k <= pmf.max_point(); ++k) out.probs.push_back(pmf.at(k) / denom);
    out.tail_mass = pmf.tail_mass / denom;
    return out;
}

PmfVector convolve(const PmfVector& a, const PmfVector& b) {
    a.validate();
    b.validate();

    PmfVector out;
    out.offset = a.offset + b.offset;
    out.tol = a.tol + b.tol;
    out.tail_mass = std::min(1.0, a.tail_mass + b.tail_mass);
    out.probs.assign(a.probs.size() + b.probs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.probs.size(); ++i) {
        if (a.probs[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.probs.size(); ++j)
            out.probs[i + j] += a.probs[i] * b.probs[j];
    }
    return out;
}

PmfVector convolve_power(const ClusterDistribution& pi, int j) {
    if (j < 0) fail("invalid-parameter", "convolution power must be non-negative");
    if (j == 0) return PmfVector::delta(0);
    PmfVector base = pi.to_pmf();
    PmfVector acc = base;
    for (int i = 1; i < j; ++i) acc = convolve(acc, base);
    return acc;
}

}  // namespace fragdist
