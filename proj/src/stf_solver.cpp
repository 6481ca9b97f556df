#include "tfix/stf_solver.hpp"

#include <algorithm>
#include <string>

#include "tfix/errors.hpp"

namespace tfix {

StfAnalysis analyze(const StfInstance& instance, const StfOptions& options) {
    InstanceParameters params = shared_structure(instance);
    OrderedFas fas = min_fas(params.shared_arcs, options.fas);
    params.shared_fas_size = fas.size();
    TypeSystem types = compute_types(instance, fas);
    std::vector<Tournament> digraphs = types_digraphs(instance, types);
    return StfAnalysis{std::move(params), std::move(fas), std::move(types), std::move(digraphs)};
}

std::vector<PlayerId> verify_seeding(const Seeding& seeding, const StfInstance& instance) {
    std::vector<PlayerId> winners;
    for (const auto& t : instance.tournaments()) winners.push_back(evaluate_bracket(seeding, t).winner());
    return winners;
}

bool favorite_wins_all(const Seeding& seeding, const StfInstance& instance) {
    auto winners = verify_seeding(seeding, instance);
    return std::all_of(winners.begin(), winners.end(), [&](PlayerId p) { return p == instance.favorite(); });
}

Seeding reconstruct_seeding(const Blueprint& bp, const AssignmentWitness& witness, const AssignmentInstance& inst,
                            const TypeSystem& types) {
    int n = bp.leaf_count();
    Seeding seeding(n, -1);
    std::vector<char> used(n, 0);
    auto place = [&](int leaf, PlayerId p) {
        if (leaf < 0 || leaf >= n || seeding[leaf] != -1 || used[p])
            throw InternalError("reconstruction assigned a leaf or player twice");
        seeding[leaf] = p;
        used[p] = 1;
    };
    for (auto [leaf, p] : inst.preassigned) place(leaf, p);

    int f = inst.flex_count();
    if (witness.flex_count != f) throw InternalError("witness does not match the assignment system");
    // Bags from strongest to weakest; within a bag, types in ≺ order, lowest-index players first.
    for (int s = 0; s < f; ++s) {
        const auto& bag = inst.bags[s];
        if (static_cast<long long>(bag.size()) != inst.demand[s]) throw InternalError("bag size differs from demand");
        std::size_t next_leaf = 0;
        for (int t = 0; t < f; ++t) {
            long long count = witness.at(s, t);
            const auto& members = types.members(inst.flex_types[t]);
            for (PlayerId p : members) {
                if (count == 0) break;
                if (used[p]) continue;
                if (next_leaf >= bag.size()) throw InternalError("bag overflow during reconstruction");
                place(bag[next_leaf++], p);
                --count;
            }
            if (count != 0) throw InternalError("not enough players of a flexible type");
        }
        if (next_leaf != bag.size()) throw InternalError("bag left partially empty");
    }
    if (!is_bijective(seeding, n)) throw InternalError("reconstructed seeding is not a bijection");
    return seeding;
}

StfVerdict solve_stf(const StfInstance& instance, const StfOptions& options) {
    StfAnalysis a = analyze(instance, options);
    if (a.k() > options.max_k)
        throw CapExceeded("parameter k = " + std::to_string(a.k()) + " (shared FAS " +
                          std::to_string(a.params.shared_fas_size) + " + private arcs " +
                          std::to_string(a.params.private_arc_count) + ") exceeds the cap " +
                          std::to_string(options.max_k) + "; raise it with k=...");

    StfVerdict verdict;
    verdict.params = a.params;

    EnumerationOptions enum_options;
    enum_options.root_label = a.types.type_of(instance.favorite());
    enum_options.max_affected = std::max(2 * options.max_k + 1, 1);
    enum_options.search_steps = &verdict.search_steps;

    verdict.blueprints_examined =
        enumerate_blueprints(a.type_digraphs, instance.size(), a.types, enum_options, [&](const Blueprint& bp) {
            ImportantVertexRecord record = important_vertices(bp);
            auto assignment = build_assignment(bp, record, a.types, a.type_digraphs);
            if (!assignment) return true;
            auto witness = solve_assignment(*assignment);
            if (!witness) return true;
            Seeding seeding = reconstruct_seeding(bp, *witness, *assignment, a.types);
            if (!favorite_wins_all(seeding, instance))
                throw InternalError("reconstructed seeding does not make the favorite win every scenario");
            verdict.yes = true;
            verdict.witness = std::move(seeding);
            return false;
        });

    if (verdict.yes) verdict.per_scenario_winners = verify_seeding(*verdict.witness, instance);
    return verdict;
}

}  // namespace tfix
