#include "tfix/fas.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "tfix/errors.hpp"

namespace tfix {

std::vector<int> OrderedFas::positions() const {
    std::vector<int> pos(ordering.size());
    for (std::size_t i = 0; i < ordering.size(); ++i) pos[ordering[i]] = static_cast<int>(i);
    return pos;
}

std::vector<Arc> back_arcs_of(const Digraph& graph, const std::vector<PlayerId>& ordering) {
    std::vector<int> pos(ordering.size());
    for (std::size_t i = 0; i < ordering.size(); ++i) pos[ordering[i]] = static_cast<int>(i);
    std::vector<Arc> back;
    for (auto [x, y] : graph.arcs())
        if (pos[y] < pos[x]) back.emplace_back(x, y);
    return back;
}

namespace {

// cost[S] = fewest leftward arcs when the vertices outside S are laid out after the prefix S.
// Appending v after S creates one back arc per arc v->u with u in S.
OrderedFas subset_dp(const Digraph& graph) {
    int n = graph.size();
    std::vector<std::uint32_t> out(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (graph.has_arc(v, u)) out[v] |= std::uint32_t{1} << u;

    std::uint32_t full = n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
    std::vector<std::uint8_t> cost(std::size_t{full} + 1, 0);
    for (std::uint32_t s = full; s-- > 0;) {
        int best = std::numeric_limits<int>::max();
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = std::uint32_t{1} << v;
            if (s & bit) continue;
            int c = std::popcount(out[v] & s) + cost[s | bit];
            best = std::min(best, c);
        }
        cost[s] = static_cast<std::uint8_t>(std::min(best, 255));
    }

    OrderedFas result;
    std::uint32_t s = 0;
    while (s != full) {
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = std::uint32_t{1} << v;
            if ((s & bit) == 0 && std::popcount(out[v] & s) + cost[s | bit] == cost[s]) {
                result.ordering.push_back(v);
                s |= bit;
                break;
            }
        }
    }
    result.back_arcs = back_arcs_of(graph, result.ordering);
    return result;
}

// Shortest directed cycle as a list of arcs, empty when acyclic.
std::vector<Arc> shortest_cycle(const Digraph& g) {
    int n = g.size();
    std::vector<Arc> best;
    for (int start = 0; start < n; ++start) {
        std::vector<int> parent(n, -1), dist(n, -1);
        std::queue<int> q;
        dist[start] = 0;
        q.push(start);
        int closing = -1;
        while (!q.empty() && closing < 0) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (!g.has_arc(u, v)) continue;
                if (v == start) {
                    closing = u;
                    break;
                }
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                }
            }
        }
        if (closing < 0) continue;
        std::vector<Arc> cycle{{closing, start}};
        for (int v = closing; v != start; v = parent[v]) cycle.emplace_back(parent[v], v);
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    }
    return best;
}

std::vector<PlayerId> smallest_topological_order(const Digraph& g) {
    int n = g.size();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : g.arcs()) ++indeg[v];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<PlayerId> order;
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v = 0; v < n; ++v)
            if (g.has_arc(u, v) && --indeg[v] == 0) ready.push(v);
    }
    return order;
}

// Every minimum FAS hits every cycle, so branching on the arcs of one cycle reaches all of them.
void collect_deletion_sets(Digraph& g, int budget, std::vector<Arc>& chosen, std::set<std::vector<Arc>>& found) {
    std::vector<Arc> cycle = shortest_cycle(g);
    if (cycle.empty()) {
        std::vector<Arc> key = chosen;
        std::sort(key.begin(), key.end());
        found.insert(std::move(key));
        return;
    }
    if (budget == 0) return;
    for (auto [u, v] : cycle) {
        g.remove_arc(u, v);
        chosen.emplace_back(u, v);
        collect_deletion_sets(g, budget - 1, chosen, found);
        chosen.pop_back();
        g.add_arc(u, v);
    }
}

OrderedFas bounded_search(const Digraph& graph, int max_size) {
    for (int budget = 0; budget <= max_size; ++budget) {
        Digraph g = graph;
        std::vector<Arc> chosen;
        std::set<std::vector<Arc>> found;
        collect_deletion_sets(g, budget, chosen, found);
        if (found.empty()) continue;
        std::vector<PlayerId> best;
        for (const auto& deletion : found) {
            Digraph h = graph;
            for (auto [u, v] : deletion) h.remove_arc(u, v);
            std::vector<PlayerId> order = smallest_topological_order(h);
            if (best.empty() || order < best) best = std::move(order);
        }
        OrderedFas result{best, back_arcs_of(graph, best)};
        return result;
    }
    throw CapExceeded("feedback arc set larger than " + std::to_string(max_size) + " on " +
                      std::to_string(graph.size()) + " players; raise the FAS cap");
}

}  // namespace

OrderedFas min_fas(const Digraph& graph, const FasOptions& options) {
    if (graph.size() <= options.subset_dp_max_n && graph.size() <= 30) return subset_dp(graph);
    return bounded_search(graph, options.search_max_size);
}

}  // namespace tfix
