#pragma once

#include "sgap/scenario.hpp"

#include <string>
#include <vector>

namespace sgap {

struct CheckResult {
    std::string name;
    /// Human-readable target, e.g. "0", ">= 1 - 1e-9", "[0.38, 0.49]".
    std::string expected;
    double got = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string note;
};

/// Checks a scenario end to end: language counts against brute force, the
/// finite-scale pressure inequalities at the solved roots, cylinder-measure
/// additivity, closed-form cross-checks where they apply, and the box
/// dimension of the generated cloud against [h, H].
std::vector<CheckResult> run_verification(const Scenario& scenario);

/// Brute-force |Lₙ| through is_allowable over all 2ⁿ words.
std::uint64_t brute_force_language_count(std::size_t n, const GapSet& set);

/// Brute-force |Gₙ|: words that are empty or end in 1 with every zero run
/// (leading one included) in S.
std::uint64_t brute_force_core_count(std::size_t n, const GapSet& set);

}  // namespace sgap
