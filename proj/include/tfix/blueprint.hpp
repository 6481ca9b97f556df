#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tfix/bracket.hpp"
#include "tfix/typesys.hpp"

namespace tfix {

/// Where path j leaves its parent path: u_j (the top vertex of path j) has height `height`
/// and its parent lies on path `parent_path`. The root path uses parent_path = -1.
struct PathAttach {
    int parent_path = -1;
    int height = 0;

    friend bool operator==(const PathAttach&, const PathAttach&) = default;
};

struct LabelRun {
    TypeId type;
    int length;

    friend bool operator==(const LabelRun&, const LabelRun&) = default;
};

/// Path-decomposition form of a blueprint. Path 0 runs from a leaf to the root; each later
/// path hangs off an earlier one. runs[j][i] run-length encodes scenario i's labels on the
/// extended path from the leaf of path j up to the root (total length log n + 1).
struct BlueprintEncoding {
    std::vector<TypeId> leaf_order;
    std::vector<PathAttach> attach;
    std::vector<std::vector<std::vector<LabelRun>>> runs;

    friend bool operator==(const BlueprintEncoding&, const BlueprintEncoding&) = default;
};

/// One-line debug form: "attach=[...];leaves=[...];runs=[...]".
std::string to_string(const BlueprintEncoding& encoding);

/// A subtree T' of the bracket tree (closed under taking parents) with one labeling per scenario.
/// Stored densely over heap indices; labels of nodes outside T' are -1.
class Blueprint {
   public:
    Blueprint(int leaves, int scenarios);

    const BracketTree& tree() const { return tree_; }
    int leaf_count() const { return tree_.leaf_count(); }
    int scenario_count() const { return m_; }

    bool contains(int v) const { return v >= 1 && v < static_cast<int>(in_.size()) && in_[v] != 0; }
    TypeId label(int v, int scenario) const { return labels_[index(v, scenario)]; }
    void add_node(int v) { in_[v] = 1; }
    /// Removes v and clears its labels.
    void remove_node(int v);
    void set_label(int v, int scenario, TypeId t) { labels_[index(v, scenario)] = t; }
    void set_labels(int v, const std::vector<TypeId>& tuple);
    std::vector<TypeId> labels(int v) const;
    /// True when v carries the same label in every scenario.
    bool uniform(int v) const;

    std::vector<int> nodes() const;
    int children_in_tree(int v) const;
    /// Smallest leaf label below v, for ordering siblings.
    TypeId min_leaf_label(int v) const;

    /// Sibling-swap normal form: single children go left; of two children the one holding the
    /// smaller leaf label goes left. Brackets are invariant under sibling swaps.
    Blueprint canonical() const;

    BlueprintEncoding encode() const;
    /// Rebuilds the blueprint; nullopt when the encoding does not describe a binary subtree
    /// with consistent labels.
    static std::optional<Blueprint> decode(const BlueprintEncoding& encoding, int leaves, int scenarios);

    std::size_t hash() const;
    friend bool operator==(const Blueprint& a, const Blueprint& b) {
        return a.m_ == b.m_ && a.in_ == b.in_ && a.labels_ == b.labels_;
    }

   private:
    std::size_t index(int v, int scenario) const { return static_cast<std::size_t>(v) * m_ + scenario; }
    void copy_canonical(int from, Blueprint& out, int to) const;

    BracketTree tree_;
    int m_;
    std::vector<std::uint8_t> in_;
    std::vector<TypeId> labels_;
};

struct BlueprintHash {
    std::size_t operator()(const Blueprint& b) const { return b.hash(); }
};

/// The blueprint generated by a player seeding: T' spans the leaves holding affected players,
/// labels are the Types-brackets restricted to T'. Returned in canonical form.
Blueprint blueprint_of_seeding(const Seeding& seeding, const TypeSystem& types,
                               const std::vector<Tournament>& type_digraphs);

/// Local validity: two-child nodes follow the match rule, one-child nodes admit one flexible
/// type t that works for every scenario (t equal to the child's label means "no change"),
/// childless nodes are bracket leaves carrying one singular type, and the leaves carry
/// each affected vertex exactly once.
bool check_blueprint(const Blueprint& candidate, const std::vector<Tournament>& type_digraphs,
                     const TypeSystem& types);

struct JTuple {
    int u, v, w;
};
struct KTuple {
    int u, v, w, scenario;
};

/// Non-blueprint children w of blueprint nodes v (u is w's sibling). J when v keeps u's
/// label in every scenario; K otherwise, with the smallest scenario where it changes.
struct ImportantVertexRecord {
    std::vector<JTuple> j_tuples;
    std::vector<KTuple> k_tuples;
};

ImportantVertexRecord important_vertices(const Blueprint& blueprint);

struct EnumerationOptions {
    /// When set, only blueprints whose root carries this label in every scenario are emitted,
    /// and subtrees holding that type's leaf must keep it as their label.
    std::optional<TypeId> root_label;
    /// Largest accepted number of affected vertices.
    int max_affected = 7;
    /// Skip partial blueprints whose assignment system is already infeasible: too few players
    /// of some flexible type, a kept label with no weaker flexible type, or more leaves
    /// demanding weak types than there are weak players. build_assignment/solve_assignment
    /// would reject all of their completions.
    bool prune_infeasible = true;
    /// When set, receives the number of node labelings tried (a measure of search effort).
    std::size_t* search_steps = nullptr;
};

/// Calls `visit` for every valid blueprint in a fixed order (leaf split structure, then labels);
/// stops early when `visit` returns false. Returns the number of blueprints visited.
/// Throws CapExceeded when there are more affected vertices than allowed.
std::size_t enumerate_blueprints(const std::vector<Tournament>& type_digraphs, int leaves, const TypeSystem& types,
                                 const EnumerationOptions& options,
                                 const std::function<bool(const Blueprint&)>& visit);

/// Number of label changes along the path from leaf node `leaf` to the root.
int type_changes_on_path(const BracketLabeling& labeling, int leaf);

}  // namespace tfix
