#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfix/blueprint.hpp"
#include "tfix/typesys.hpp"

namespace tfix {

/// Transportation-style feasibility system over the flexible types (indexed 0..F-1 in ≺ order):
/// row sums of x equal the leaf demands b, column sums equal the player supplies c,
/// and x is zero on forbidden cells.
struct AssignmentInstance {
    std::vector<TypeId> flex_types;
    std::vector<long long> demand;   // b_s: leaves whose strongest admissible type is s
    std::vector<long long> supply;   // c_t: unassigned players of type t
    std::vector<char> forbidden;     // F x F, row s, column t

    /// Leaves and players fixed while building: blueprint leaves and one leaf per K tuple.
    std::vector<std::pair<int, PlayerId>> preassigned;
    /// Leaf positions pooled into each bag B_s, in increasing order.
    std::vector<std::vector<int>> bags;

    int flex_count() const { return static_cast<int>(flex_types.size()); }
    bool is_forbidden(int s, int t) const { return forbidden[static_cast<std::size_t>(s) * flex_count() + t] != 0; }
    void forbid(int s, int t) { forbidden[static_cast<std::size_t>(s) * flex_count() + t] = 1; }
};

/// Bare system with cells (s, t), t ≺ s, forbidden.
AssignmentInstance make_assignment_instance(std::vector<long long> demand, std::vector<long long> supply);

struct AssignmentWitness {
    int flex_count = 0;
    std::vector<long long> x;  // row-major F x F

    long long at(int s, int t) const { return x[static_cast<std::size_t>(s) * flex_count + t]; }
};

/// Builds the system for a checked blueprint. Returns nullopt (a rejection) when some
/// supply goes negative or a J tuple has no admissible flexible type.
std::optional<AssignmentInstance> build_assignment(const Blueprint& blueprint, const ImportantVertexRecord& record,
                                                   const TypeSystem& types,
                                                   const std::vector<Tournament>& type_digraphs);

/// Strongest flexible type that every label in `labels` beats or equals, if any.
std::optional<TypeId> strongest_beaten_flex(const std::vector<TypeId>& labels, const TypeSystem& types,
                                            const std::vector<Tournament>& type_digraphs);

/// Integral witness via maximum flow on the bag/type network, or nullopt when infeasible.
std::optional<AssignmentWitness> solve_assignment(const AssignmentInstance& instance);

/// Independent check of all four constraint groups.
bool satisfies(const AssignmentInstance& instance, const AssignmentWitness& witness);

}  // namespace tfix
