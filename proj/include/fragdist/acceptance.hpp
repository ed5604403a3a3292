#pragma once

#include <string>
#include <vector>

namespace fragdist::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full verification sweep (criteria 1-11): closed-form
// reproduction, oracle equivalences, bound domination, monotonicity and
// seeded Monte Carlo consistency. Each criterion carries its measured
// worst case and the tolerance it was held to.
std::vector<CriterionResult> run_all();

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace fragdist::acceptance
