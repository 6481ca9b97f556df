#pragma once

#include <cstdint>

#include "tfix/instance.hpp"

namespace tfix {

struct GenSpec {
    int n = 4;
    /// STF: number of scenarios.
    int scenarios = 1;
    /// STF: pairs re-oriented across scenarios (each one ends up private when scenarios >= 2).
    int private_pairs = 0;
    /// PTF: pairs given a fractional probability.
    int fractional_pairs = 0;
    /// Arcs of the hidden transitive order that are flipped; bounds the shared/certainty FAS.
    int back_arcs = 0;
    std::uint64_t seed = 0;
};

/// Random STF instance with players "p1".."pn"; deterministic per seed.
/// Throws ValidationError when the GenSpec is unsatisfiable (e.g. more scenarios than 2^private_pairs).
StfInstance gen_random_stf(const GenSpec& spec);

/// Random PTF instance; fractional entries have denominators <= 64, as does the target.
ProbabilityInstance gen_random_ptf(const GenSpec& spec);

/// Two-scenario instance equivalent to the TF instance (tournament, favorite): the input
/// tournament plus a transitive one ranking the favorite first and the rest in input order.
StfInstance hardness_stf_from_tf(const std::vector<std::string>& players, const Tournament& tournament,
                                 PlayerId favorite);

}  // namespace tfix
