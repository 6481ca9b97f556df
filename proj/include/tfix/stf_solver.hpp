#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tfix/assignment.hpp"
#include "tfix/blueprint.hpp"
#include "tfix/fas.hpp"
#include "tfix/instance.hpp"
#include "tfix/typesys.hpp"

namespace tfix {

struct StfOptions {
    /// Cap on k = shared FAS size + private arc count.
    int max_k = 3;
    FasOptions fas;
};

/// Everything derived from an instance before the blueprint search.
struct StfAnalysis {
    InstanceParameters params;
    OrderedFas shared_fas;
    TypeSystem types;
    std::vector<Tournament> type_digraphs;

    int k() const { return params.shared_fas_size + params.private_arc_count; }
};

StfAnalysis analyze(const StfInstance& instance, const StfOptions& options = {});

struct StfVerdict {
    bool yes = false;
    std::optional<Seeding> witness;
    std::vector<PlayerId> per_scenario_winners;
    InstanceParameters params;
    std::size_t blueprints_examined = 0;
    /// Node labelings tried by the blueprint search.
    std::size_t search_steps = 0;
};

/// Decides STF by searching blueprints whose root is the favorite and testing their assignment
/// systems. Every yes verdict carries a seeding re-verified on all scenarios.
/// Throws CapExceeded when k exceeds options.max_k.
StfVerdict solve_stf(const StfInstance& instance, const StfOptions& options = {});

/// Fills a full player seeding from a blueprint and a feasible witness of its assignment system.
/// Throws InternalError if the witness does not fit the instance.
Seeding reconstruct_seeding(const Blueprint& blueprint, const AssignmentWitness& witness,
                            const AssignmentInstance& assignment, const TypeSystem& types);

/// Bracket winner in each scenario.
std::vector<PlayerId> verify_seeding(const Seeding& seeding, const StfInstance& instance);

bool favorite_wins_all(const Seeding& seeding, const StfInstance& instance);

}  // namespace tfix
