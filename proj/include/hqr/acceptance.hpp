#pragma once

#include <string>
#include <vector>

namespace hqr {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full verification suite. `seed` feeds the randomized Parseval and
/// Riesz checks only; everything else is deterministic.
std::vector<CriterionResult> run_acceptance(unsigned seed = 1);

}  // namespace hqr
