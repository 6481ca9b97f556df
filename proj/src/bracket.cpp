#include "tfix/bracket.hpp"

#include <bit>

#include "tfix/errors.hpp"

namespace tfix {

BracketTree::BracketTree(int leaves) : n_(leaves), depth_(0) {
    if (!is_power_of_two(leaves)) throw ValidationError("bracket size must be a power of 2");
    depth_ = std::countr_zero(static_cast<unsigned>(leaves));
}

int BracketTree::height(int v) const { return depth_ - (std::bit_width(static_cast<unsigned>(v)) - 1); }

bool BracketTree::is_descendant(int w, int v) const {
    int hv = height(v), hw = height(w);
    return hw <= hv && (w >> (hv - hw)) == v;
}

bool is_bijective(const Seeding& seeding, int players) {
    if (static_cast<int>(seeding.size()) != players) return false;
    std::vector<char> seen(players, 0);
    for (int p : seeding) {
        if (p < 0 || p >= players || seen[p]) return false;
        seen[p] = 1;
    }
    return true;
}

namespace {

template <typename Beats>
BracketLabeling fill_bracket(const Seeding& seeding, Beats beats) {
    BracketTree tree(static_cast<int>(seeding.size()));
    BracketLabeling out;
    out.label.assign(2 * tree.leaf_count(), -1);
    for (int i = 0; i < tree.leaf_count(); ++i) out.label[tree.leaf_node(i)] = seeding[i];
    for (int v = tree.leaf_count() - 1; v >= 1; --v) {
        int a = out.label[BracketTree::left(v)];
        int b = out.label[BracketTree::right(v)];
        out.label[v] = beats(a, b) ? a : b;
    }
    return out;
}

}  // namespace

BracketLabeling evaluate_bracket(const Seeding& seeding, const Tournament& tournament) {
    if (!is_bijective(seeding, tournament.size())) throw ValidationError("seeding is not a bijection onto the players");
    return fill_bracket(seeding, [&](int a, int b) { return tournament.beats(a, b); });
}

BracketLabeling evaluate_types_bracket(const Seeding& types_seeding, const Tournament& types_digraph) {
    return fill_bracket(types_seeding, [&](int a, int b) { return a != b && types_digraph.beats(a, b); });
}

std::vector<Rational> win_probability(const Seeding& seeding, const ProbabilityInstance& instance) {
    int n = instance.size();
    if (!is_bijective(seeding, n)) throw ValidationError("seeding is not a bijection onto the players");
    BracketTree tree(n);
    // reach[v] holds (player, probability of reaching v) for the players seeded below v.
    std::vector<std::vector<std::pair<PlayerId, Rational>>> reach(2 * n);
    for (int i = 0; i < n; ++i) reach[tree.leaf_node(i)] = {{seeding[i], Rational(1)}};
    for (int v = n - 1; v >= 1; --v) {
        const auto& l = reach[BracketTree::left(v)];
        const auto& r = reach[BracketTree::right(v)];
        auto& out = reach[v];
        for (const auto& [p, rp] : l) {
            Rational beat_right(0);
            for (const auto& [q, rq] : r) beat_right += rq * instance.prob(p, q);
            out.emplace_back(p, rp * beat_right);
        }
        for (const auto& [q, rq] : r) {
            Rational beat_left(0);
            for (const auto& [p, rp] : l) beat_left += rp * instance.prob(q, p);
            out.emplace_back(q, rq * beat_left);
        }
    }
    std::vector<Rational> result(n, Rational(0));
    for (const auto& [p, rp] : reach[1]) result[p] = rp;
    return result;
}

Seeding identity_seeding(int n) {
    Seeding s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

}  // namespace tfix
