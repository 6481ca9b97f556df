#include "tfix/typesys.hpp"

#include <algorithm>
#include <set>

namespace tfix {

TypeSystem::TypeSystem(std::vector<PlayerId> affected, std::vector<TypeId> type_of)
    : affected_(std::move(affected)), type_of_(std::move(type_of)), members_(type_count()) {
    for (PlayerId p = 0; p < static_cast<int>(type_of_.size()); ++p) members_[type_of_[p]].push_back(p);
}

std::vector<TypeId> TypeSystem::flex_types() const {
    std::vector<TypeId> out;
    for (int j = 0; j < flex_count(); ++j) out.push_back(flex_type(j));
    return out;
}

std::string TypeSystem::type_name(TypeId t, const std::vector<std::string>& players) const {
    if (is_flexible(t)) return std::to_string(flex_index(t) + 1);
    return players[singular_player(t)];
}

TypeSystem compute_types(const StfInstance& instance, const OrderedFas& shared_fas) {
    int n = instance.size();
    std::set<PlayerId> affected_set{instance.favorite()};
    for (auto [x, y] : shared_fas.back_arcs) {
        affected_set.insert(x);
        affected_set.insert(y);
    }
    const Tournament& first = instance.tournament(0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool orientation = first.beats(u, v);
            for (const auto& t : instance.tournaments())
                if (t.beats(u, v) != orientation) {
                    affected_set.insert(u);
                    affected_set.insert(v);
                    break;
                }
        }

    std::vector<int> pos = shared_fas.positions();
    std::vector<PlayerId> affected(affected_set.begin(), affected_set.end());
    std::sort(affected.begin(), affected.end(), [&](PlayerId a, PlayerId b) { return pos[a] < pos[b]; });

    int k = static_cast<int>(affected.size());
    std::vector<TypeId> type_of(n);
    for (PlayerId p = 0; p < n; ++p) {
        auto it = std::find(affected.begin(), affected.end(), p);
        if (it != affected.end()) {
            type_of[p] = TypeSystem::singular_type(static_cast<int>(it - affected.begin()));
            continue;
        }
        int j = 0;
        while (j < k && pos[affected[j]] < pos[p]) ++j;
        type_of[p] = TypeSystem::flex_type(j);
    }
    return TypeSystem(std::move(affected), std::move(type_of));
}

Tournament types_digraph(const StfInstance& instance, const TypeSystem& types, int scenario) {
    const Tournament& d = instance.tournament(scenario);
    int count = types.type_count();
    Digraph g(count);
    for (TypeId x = 0; x < count; ++x)
        for (TypeId y = x + 1; y < count; ++y) {
            bool x_wins = true;
            if (!TypeSystem::is_flexible(x) && !TypeSystem::is_flexible(y))
                x_wins = d.beats(types.singular_player(x), types.singular_player(y));
            if (x_wins)
                g.add_arc(x, y);
            else
                g.add_arc(y, x);
        }
    return Tournament(std::move(g));
}

std::vector<Tournament> types_digraphs(const StfInstance& instance, const TypeSystem& types) {
    std::vector<Tournament> out;
    for (int i = 0; i < instance.scenario_count(); ++i) out.push_back(types_digraph(instance, types, i));
    return out;
}

}  // namespace tfix
