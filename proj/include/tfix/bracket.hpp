#pragma once

#include <vector>

#include "tfix/instance.hpp"
#include "tfix/rational.hpp"

namespace tfix {

/// Implicit perfect binary tree with n leaves in heap order: root 1, children 2v and 2v+1,
/// leaves n..2n-1 (leaf position i is node n + i).
class BracketTree {
   public:
    explicit BracketTree(int leaves);

    int leaf_count() const { return n_; }
    int node_count() const { return 2 * n_ - 1; }
    /// log2(n); also the height of the root.
    int depth() const { return depth_; }

    static constexpr int root() { return 1; }
    static int parent(int v) { return v / 2; }
    static int left(int v) { return 2 * v; }
    static int right(int v) { return 2 * v + 1; }
    static int sibling(int v) { return v ^ 1; }

    bool is_leaf(int v) const { return v >= n_; }
    int leaf_node(int position) const { return n_ + position; }
    int leaf_position(int v) const { return v - n_; }
    /// Edges from v down to its closest leaf.
    int height(int v) const;
    /// Leaf positions [first, last] under v.
    int first_leaf(int v) const { return (v << height(v)) - n_; }
    int last_leaf(int v) const { return ((v + 1) << height(v)) - 1 - n_; }
    bool is_descendant(int w, int v) const;

   private:
    int n_;
    int depth_;
};

/// leaves[i] is the player (or type) seeded at leaf position i.
using Seeding = std::vector<int>;

/// label[v] for heap nodes 1..2n-1; label[0] is unused.
struct BracketLabeling {
    std::vector<int> label;

    int winner() const { return label.at(1); }
};

bool is_bijective(const Seeding& seeding, int players);

/// Deterministic bracket: the winner of each match climbs to the parent.
/// Throws ValidationError when the seeding is not a bijection onto the players.
BracketLabeling evaluate_bracket(const Seeding& seeding, const Tournament& tournament);

/// Same rule over a Types-digraph; the seeding may repeat types. Equal labels meet as "no change".
BracketLabeling evaluate_types_bracket(const Seeding& types_seeding, const Tournament& types_digraph);

/// Exact probability that each player wins the bracket.
std::vector<Rational> win_probability(const Seeding& seeding, const ProbabilityInstance& instance);

/// The identity seeding 0, 1, ..., n-1.
Seeding identity_seeding(int n);

}  // namespace tfix
