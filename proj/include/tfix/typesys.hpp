#pragma once

#include <string>
#include <vector>

#include "tfix/fas.hpp"
#include "tfix/instance.hpp"

namespace tfix {

/// Types are numbered by their position in the order ≺: even ids are flexible
/// (flexible type j sits just left of the j-th affected vertex, the last one right of all),
/// odd id 2j+1 is the singular type of the j-th affected vertex.
using TypeId = int;

class TypeSystem {
   public:
    TypeSystem(std::vector<PlayerId> affected, std::vector<TypeId> type_of);

    /// Affected vertices a_1, ..., a_k' sorted by ≺.
    const std::vector<PlayerId>& affected() const { return affected_; }
    int affected_count() const { return static_cast<int>(affected_.size()); }
    TypeId type_of(PlayerId p) const { return type_of_[p]; }
    int type_count() const { return 2 * affected_count() + 1; }
    int flex_count() const { return affected_count() + 1; }

    static bool is_flexible(TypeId t) { return t % 2 == 0; }
    static TypeId singular_type(int affected_index) { return 2 * affected_index + 1; }
    static TypeId flex_type(int flex_index) { return 2 * flex_index; }
    static int flex_index(TypeId t) { return t / 2; }
    static int affected_index(TypeId t) { return t / 2; }

    PlayerId singular_player(TypeId t) const { return affected_[affected_index(t)]; }
    /// Players of type t in increasing index order.
    const std::vector<PlayerId>& members(TypeId t) const { return members_[t]; }
    std::vector<TypeId> flex_types() const;

    /// "1", "2", ... for flexible types (1-based), the player name for singular ones.
    std::string type_name(TypeId t, const std::vector<std::string>& players) const;

   private:
    std::vector<PlayerId> affected_;
    std::vector<TypeId> type_of_;
    std::vector<std::vector<PlayerId>> members_;
};

/// Endpoints of back arcs of `fas`, endpoints of private arcs, and the favorite, typed relative to ≺.
TypeSystem compute_types(const StfInstance& instance, const OrderedFas& shared_fas);

/// Tournament over the types induced by scenario i. Arcs touching a flexible type follow ≺
/// (also for empty flexible types); arcs between singular types follow the scenario.
Tournament types_digraph(const StfInstance& instance, const TypeSystem& types, int scenario);
std::vector<Tournament> types_digraphs(const StfInstance& instance, const TypeSystem& types);

}  // namespace tfix
