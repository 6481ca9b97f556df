#include "tfix/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace tfix {

AssignmentInstance make_assignment_instance(std::vector<long long> demand, std::vector<long long> supply) {
    AssignmentInstance inst;
    int f = static_cast<int>(demand.size());
    for (int j = 0; j < f; ++j) inst.flex_types.push_back(TypeSystem::flex_type(j));
    inst.demand = std::move(demand);
    inst.supply = std::move(supply);
    inst.forbidden.assign(static_cast<std::size_t>(f) * f, 0);
    for (int s = 0; s < f; ++s)
        for (int t = 0; t < s; ++t) inst.forbid(s, t);
    inst.bags.assign(f, {});
    return inst;
}

std::optional<TypeId> strongest_beaten_flex(const std::vector<TypeId>& labels, const TypeSystem& types,
                                            const std::vector<Tournament>& type_digraphs) {
    for (TypeId q : types.flex_types()) {
        bool ok = true;
        for (std::size_t i = 0; i < labels.size() && ok; ++i)
            ok = labels[i] == q || type_digraphs[i].beats(labels[i], q);
        if (ok) return q;
    }
    return std::nullopt;
}

std::optional<AssignmentInstance> build_assignment(const Blueprint& bp, const ImportantVertexRecord& record,
                                                   const TypeSystem& types,
                                                   const std::vector<Tournament>& type_digraphs) {
    const BracketTree& tree = bp.tree();
    int f = types.flex_count();
    std::vector<long long> supply(f);
    for (int j = 0; j < f; ++j) supply[j] = static_cast<long long>(types.members(TypeSystem::flex_type(j)).size());
    AssignmentInstance inst = make_assignment_instance(std::vector<long long>(f, 0), std::move(supply));

    for (int v : bp.nodes())
        if (tree.is_leaf(v)) inst.preassigned.emplace_back(tree.leaf_position(v), types.singular_player(bp.label(v, 0)));

    std::vector<std::size_t> next_member(types.type_count(), 0);
    for (const auto& [u, v, w] : record.j_tuples) {
        auto q = strongest_beaten_flex(bp.labels(v), types, type_digraphs);
        if (!q) return std::nullopt;
        int s = TypeSystem::flex_index(*q);
        inst.demand[s] += 1LL << tree.height(w);
        for (int leaf = tree.first_leaf(w); leaf <= tree.last_leaf(w); ++leaf) inst.bags[s].push_back(leaf);
    }
    for (const auto& [u, v, w, i] : record.k_tuples) {
        TypeId t = bp.label(v, i);
        if (!TypeSystem::is_flexible(t)) return std::nullopt;
        int s = TypeSystem::flex_index(t);
        inst.demand[s] += (1LL << tree.height(w)) - 1;
        if (--inst.supply[s] < 0) return std::nullopt;
        int z = tree.first_leaf(w);
        inst.preassigned.emplace_back(z, types.members(t)[next_member[t]++]);
        for (int leaf = z + 1; leaf <= tree.last_leaf(w); ++leaf) inst.bags[s].push_back(leaf);
    }
    for (auto& bag : inst.bags) std::sort(bag.begin(), bag.end());
    std::sort(inst.preassigned.begin(), inst.preassigned.end());
    return inst;
}

std::optional<AssignmentWitness> solve_assignment(const AssignmentInstance& inst) {
    int f = inst.flex_count();
    long long total_demand = std::accumulate(inst.demand.begin(), inst.demand.end(), 0LL);
    long long total_supply = std::accumulate(inst.supply.begin(), inst.supply.end(), 0LL);
    if (total_demand != total_supply) return std::nullopt;
    for (int j = 0; j < f; ++j)
        if (inst.demand[j] < 0 || inst.supply[j] < 0) return std::nullopt;

    // Nodes: source 0, bags 1..f, types f+1..2f, sink 2f+1.
    int nodes = 2 * f + 2, source = 0, sink = 2 * f + 1;
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> cap(static_cast<std::size_t>(nodes) * nodes, 0);
    auto at = [&](int a, int b) -> long long& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
    for (int s = 0; s < f; ++s) {
        at(source, 1 + s) = inst.demand[s];
        at(1 + f + s, sink) = inst.supply[s];
        for (int t = 0; t < f; ++t)
            if (!inst.is_forbidden(s, t)) at(1 + s, 1 + f + t) = inf;
    }
    std::vector<long long> original = cap;

    long long flow = 0;
    while (true) {
        std::vector<int> parent(nodes, -1);
        parent[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent[sink] < 0) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < nodes; ++b)
                if (parent[b] < 0 && at(a, b) > 0) {
                    parent[b] = a;
                    q.push(b);
                }
        }
        if (parent[sink] < 0) break;
        long long push = inf;
        for (int b = sink; b != source; b = parent[b]) push = std::min(push, at(parent[b], b));
        for (int b = sink; b != source; b = parent[b]) {
            at(parent[b], b) -= push;
            at(b, parent[b]) += push;
        }
        flow += push;
    }
    if (flow != total_demand) return std::nullopt;

    AssignmentWitness w{f, std::vector<long long>(static_cast<std::size_t>(f) * f, 0)};
    for (int s = 0; s < f; ++s)
        for (int t = 0; t < f; ++t) {
            if (inst.is_forbidden(s, t)) continue;
            long long used = original[static_cast<std::size_t>(1 + s) * nodes + 1 + f + t] - at(1 + s, 1 + f + t);
            w.x[static_cast<std::size_t>(s) * f + t] = used;
        }
    return w;
}

bool satisfies(const AssignmentInstance& inst, const AssignmentWitness& w) {
    int f = inst.flex_count();
    if (w.flex_count != f || static_cast<int>(w.x.size()) != f * f) return false;
    for (int s = 0; s < f; ++s) {
        long long row = 0;
        for (int t = 0; t < f; ++t) {
            long long v = w.at(s, t);
            if (v < 0) return false;
            if (v != 0 && inst.is_forbidden(s, t)) return false;
            row += v;
        }
        if (row != inst.demand[s]) return false;
    }
    for (int t = 0; t < f; ++t) {
        long long col = 0;
        for (int s = 0; s < f; ++s) col += w.at(s, t);
        if (col != inst.supply[t]) return false;
    }
    return true;
}

}  // namespace tfix
