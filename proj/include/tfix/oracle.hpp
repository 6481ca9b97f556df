#pragma once

#include <functional>
#include <optional>

#include "tfix/bracket.hpp"
#include "tfix/instance.hpp"
#include "tfix/rational.hpp"

namespace tfix {

struct OracleOptions {
    int max_n = 8;
    /// Enumerate one seeding per sibling-swap class (n!/2^(n-1) of them) instead of all n!.
    bool symmetry_reduction = true;
    int threads = 1;
    bool deterministic = true;
};

struct OracleReport {
    bool yes = false;
    std::optional<Seeding> witness;
    /// PTF only: maximum over seedings of the favorite's win probability.
    std::optional<Rational> best_probability;
};

/// Visits seedings in a fixed order until `visit` returns false.
void for_each_seeding(int n, bool symmetry_reduction, const std::function<bool(const Seeding&)>& visit);
std::vector<Seeding> all_seedings(int n, bool symmetry_reduction);

/// Brute force: yes iff some seeding makes the favorite win every scenario.
OracleReport oracle_stf(const StfInstance& instance, const OracleOptions& options = {});

/// Brute force: best win probability over all seedings, compared exactly against the target.
OracleReport oracle_ptf(const ProbabilityInstance& instance, const OracleOptions& options = {});

}  // namespace tfix
