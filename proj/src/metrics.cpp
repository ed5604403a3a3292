#include "fragdist/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fragdist/error.hpp"

namespace fragdist {

TvReport tv_distance(const PmfVector& a, const PmfVector& b) {
    a.validate();
    b.validate();

    const int lo = std::min(a.offset, b.offset);
    const int hi = std::max(a.max_point(), b.max_point());

    // Half-L1 over the stored supports, split by sign so the larger of the
    // two one-sided sums is certified exactly by its own event.
    double pos = 0.0;
    double neg = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const double d = a.at(k) - b.at(k);
        if (d > 0.0) pos += d;
        else neg -= d;
    }

    TvReport report;
    report.tv = std::max(pos, neg);
    report.tail_bound = a.tail_mass + b.tail_mass;
    report.precision_warning = report.tail_bound >= 1e-9;
    const bool want_positive = pos >= neg;
    for (int k = lo; k <= hi; ++k) {
        const double d = a.at(k) - b.at(k);
        if ((want_positive && d > 0.0) || (!want_positive && d < 0.0))
            report.achieving_set.push_back(k);
    }
    return report;
}

PmfVector empirical_pmf(const std::vector<int>& counts) {
    if (counts.empty()) fail("invalid-parameter", "empty sample batch");
    int lo = counts[0];
    int hi = counts[0];
    for (int c : counts) {
        if (c < 0) fail("invalid-parameter", "counts must be non-negative");
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }

    PmfVector out;
    out.offset = lo;
    out.probs.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    const double w = 1.0 / static_cast<double>(counts.size());
    for (int c : counts) out.probs[static_cast<std::size_t>(c - lo)] += w;
    out.tail_mass = 0.0;
    return out;
}

PmfVector conditional_empirical(const std::vector<int>& counts, int m) {
    if (m < 0) fail("invalid-parameter", "conditioning level m must be non-negative");
    std::vector<int> kept;
    kept.reserve(counts.size());
    for (int c : counts)
        if (c >= m) kept.push_back(c);
    if (kept.size() < 100)
        fail("insufficient-data", "fewer than 100 samples reach the conditioning level");
    return empirical_pmf(kept);
}

}  // namespace fragdist
