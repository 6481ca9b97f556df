#include "tfix/blueprint.hpp"

#include "tfix/assignment.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <string>

#include "tfix/errors.hpp"

namespace tfix {

std::string to_string(const BlueprintEncoding& encoding) {
    std::ostringstream out;
    out << "attach=[";
    for (std::size_t j = 0; j < encoding.attach.size(); ++j)
        out << (j ? "," : "") << encoding.attach[j].parent_path << ':' << encoding.attach[j].height;
    out << "];leaves=[";
    for (std::size_t j = 0; j < encoding.leaf_order.size(); ++j) out << (j ? "," : "") << encoding.leaf_order[j];
    out << "];runs=[";
    for (std::size_t j = 0; j < encoding.runs.size(); ++j) {
        out << (j ? "," : "") << '[';
        for (std::size_t i = 0; i < encoding.runs[j].size(); ++i) {
            out << (i ? "|" : "");
            for (std::size_t r = 0; r < encoding.runs[j][i].size(); ++r)
                out << (r ? " " : "") << encoding.runs[j][i][r].type << 'x' << encoding.runs[j][i][r].length;
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Blueprint::Blueprint(int leaves, int scenarios)
    : tree_(leaves),
      m_(scenarios),
      in_(2 * static_cast<std::size_t>(leaves), 0),
      labels_(2 * static_cast<std::size_t>(leaves) * scenarios, -1) {}

void Blueprint::remove_node(int v) {
    in_[v] = 0;
    std::fill_n(labels_.begin() + static_cast<std::ptrdiff_t>(index(v, 0)), m_, -1);
}

void Blueprint::set_labels(int v, const std::vector<TypeId>& tuple) {
    std::copy(tuple.begin(), tuple.end(), labels_.begin() + static_cast<std::ptrdiff_t>(index(v, 0)));
}

std::vector<TypeId> Blueprint::labels(int v) const {
    auto first = labels_.begin() + static_cast<std::ptrdiff_t>(index(v, 0));
    return {first, first + m_};
}

bool Blueprint::uniform(int v) const {
    for (int i = 1; i < m_; ++i)
        if (label(v, i) != label(v, 0)) return false;
    return true;
}

std::vector<int> Blueprint::nodes() const {
    std::vector<int> out;
    for (int v = 1; v < static_cast<int>(in_.size()); ++v)
        if (in_[v]) out.push_back(v);
    return out;
}

int Blueprint::children_in_tree(int v) const {
    if (tree_.is_leaf(v)) return 0;
    return (contains(BracketTree::left(v)) ? 1 : 0) + (contains(BracketTree::right(v)) ? 1 : 0);
}

TypeId Blueprint::min_leaf_label(int v) const {
    if (tree_.is_leaf(v)) return label(v, 0);
    TypeId best = std::numeric_limits<TypeId>::max();
    for (int c : {BracketTree::left(v), BracketTree::right(v)})
        if (contains(c)) best = std::min(best, min_leaf_label(c));
    return best;
}

void Blueprint::copy_canonical(int from, Blueprint& out, int to) const {
    out.add_node(to);
    out.set_labels(to, labels(from));
    if (tree_.is_leaf(from)) return;
    int a = BracketTree::left(from), b = BracketTree::right(from);
    bool has_a = contains(a), has_b = contains(b);
    if (has_a && has_b) {
        if (min_leaf_label(b) < min_leaf_label(a)) std::swap(a, b);
        copy_canonical(a, out, BracketTree::left(to));
        copy_canonical(b, out, BracketTree::right(to));
    } else if (has_a || has_b) {
        copy_canonical(has_a ? a : b, out, BracketTree::left(to));
    }
}

Blueprint Blueprint::canonical() const {
    Blueprint out(leaf_count(), m_);
    if (contains(BracketTree::root())) copy_canonical(BracketTree::root(), out, BracketTree::root());
    return out;
}

BlueprintEncoding Blueprint::encode() const {
    BlueprintEncoding enc;
    std::vector<int> leaf_of;
    // Each path descends from its top, continuing into the left child when present.
    std::function<void(int, int)> walk = [&](int top, int parent_path) {
        int id = static_cast<int>(leaf_of.size());
        leaf_of.push_back(-1);
        enc.attach.push_back({parent_path, tree_.height(top)});
        std::vector<int> spawned;
        int v = top;
        while (!tree_.is_leaf(v)) {
            int l = BracketTree::left(v), r = BracketTree::right(v);
            bool in_l = contains(l), in_r = contains(r);
            if (in_l && in_r) spawned.push_back(r);
            v = in_l ? l : r;
        }
        leaf_of[id] = v;
        for (int s : spawned) walk(s, id);
    };
    if (!contains(BracketTree::root())) return enc;
    walk(BracketTree::root(), -1);

    for (int leaf : leaf_of) {
        enc.leaf_order.push_back(label(leaf, 0));
        std::vector<std::vector<LabelRun>> per_scenario;
        for (int i = 0; i < m_; ++i) {
            std::vector<LabelRun> runs;
            for (int v = leaf; v >= 1; v = BracketTree::parent(v)) {
                if (!runs.empty() && runs.back().type == label(v, i))
                    ++runs.back().length;
                else
                    runs.push_back({label(v, i), 1});
            }
            per_scenario.push_back(std::move(runs));
        }
        enc.runs.push_back(std::move(per_scenario));
    }
    return enc;
}

std::optional<Blueprint> Blueprint::decode(const BlueprintEncoding& enc, int leaves, int scenarios) {
    Blueprint bp(leaves, scenarios);
    const BracketTree& tree = bp.tree();
    std::size_t paths = enc.leaf_order.size();
    if (paths == 0 || enc.attach.size() != paths || enc.runs.size() != paths) return std::nullopt;
    if (enc.attach[0].parent_path != -1 || enc.attach[0].height != tree.depth()) return std::nullopt;
    {
        std::vector<TypeId> sorted = enc.leaf_order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    }

    std::vector<int> leaf_of(paths), top_of(paths);
    auto descend = [&](int top) {
        int v = top;
        bp.add_node(v);
        while (!tree.is_leaf(v)) {
            v = BracketTree::left(v);
            bp.add_node(v);
        }
        return v;
    };
    top_of[0] = BracketTree::root();
    leaf_of[0] = descend(BracketTree::root());
    for (std::size_t j = 1; j < paths; ++j) {
        auto [parent_path, h] = enc.attach[j];
        if (parent_path < 0 || parent_path >= static_cast<int>(j)) return std::nullopt;
        if (h < 0 || h + 1 > tree.height(top_of[parent_path])) return std::nullopt;
        int x = leaf_of[parent_path] >> (h + 1);
        int u = BracketTree::right(x);
        if (bp.contains(u)) return std::nullopt;  // would give x a third child
        top_of[j] = u;
        leaf_of[j] = descend(u);
    }

    for (std::size_t j = 0; j < paths; ++j) {
        if (static_cast<int>(enc.runs[j].size()) != scenarios) return std::nullopt;
        for (int i = 0; i < scenarios; ++i) {
            int v = leaf_of[j];
            int total = 0;
            for (const auto& run : enc.runs[j][i]) {
                if (run.length <= 0) return std::nullopt;
                total += run.length;
                for (int step = 0; step < run.length; ++step) {
                    if (v < 1) return std::nullopt;
                    TypeId existing = bp.label(v, i);
                    if (existing != -1 && existing != run.type) return std::nullopt;
                    bp.set_label(v, i, run.type);
                    v = BracketTree::parent(v);
                }
            }
            if (total != tree.depth() + 1) return std::nullopt;
            if (bp.label(leaf_of[j], i) != enc.leaf_order[j]) return std::nullopt;
        }
    }
    return bp;
}

std::size_t Blueprint::hash() const {
    std::size_t h = static_cast<std::size_t>(m_);
    for (std::size_t v = 1; v < in_.size(); ++v) {
        if (!in_[v]) continue;
        h = h * 1000003u ^ v;
        for (int i = 0; i < m_; ++i) h = h * 31u + static_cast<std::size_t>(labels_[index(static_cast<int>(v), i)] + 1);
    }
    return h;
}

Blueprint blueprint_of_seeding(const Seeding& seeding, const TypeSystem& types,
                               const std::vector<Tournament>& type_digraphs) {
    int n = static_cast<int>(seeding.size());
    int m = static_cast<int>(type_digraphs.size());
    Seeding typed(n);
    for (int i = 0; i < n; ++i) typed[i] = types.type_of(seeding[i]);

    Blueprint bp(n, m);
    BracketTree tree(n);
    for (int pos = 0; pos < n; ++pos) {
        if (TypeSystem::is_flexible(typed[pos])) continue;
        for (int v = tree.leaf_node(pos); v >= 1 && !bp.contains(v); v = BracketTree::parent(v)) bp.add_node(v);
    }
    for (int i = 0; i < m; ++i) {
        BracketLabeling lab = evaluate_types_bracket(typed, type_digraphs[i]);
        for (int v : bp.nodes()) bp.set_label(v, i, lab.label[v]);
    }
    return bp.canonical();
}

namespace {

// Label that climbs out of a match between a and b.
TypeId match(TypeId a, TypeId b, const Tournament& f) { return (a == b || f.beats(a, b)) ? a : b; }

}  // namespace

bool check_blueprint(const Blueprint& bp, const std::vector<Tournament>& type_digraphs, const TypeSystem& types) {
    const BracketTree& tree = bp.tree();
    int m = bp.scenario_count();
    if (m != static_cast<int>(type_digraphs.size())) return false;
    if (!bp.contains(BracketTree::root())) return false;

    std::vector<int> seen_singular(types.affected_count(), 0);
    for (int v : bp.nodes()) {
        if (v != BracketTree::root() && !bp.contains(BracketTree::parent(v))) return false;
        for (int i = 0; i < m; ++i) {
            TypeId t = bp.label(v, i);
            if (t < 0 || t >= types.type_count()) return false;
        }
        int kids = bp.children_in_tree(v);
        if (kids == 2) {
            int u = BracketTree::left(v), w = BracketTree::right(v);
            for (int i = 0; i < m; ++i)
                if (bp.label(v, i) != match(bp.label(u, i), bp.label(w, i), type_digraphs[i])) return false;
        } else if (kids == 1) {
            int u = bp.contains(BracketTree::left(v)) ? BracketTree::left(v) : BracketTree::right(v);
            bool some_t = false;
            for (TypeId t : types.flex_types()) {
                bool works = true;
                for (int i = 0; i < m && works; ++i) {
                    TypeId q = bp.label(u, i);
                    TypeId got = bp.label(v, i);
                    if (t == q)
                        works = got == q;
                    else if (type_digraphs[i].beats(q, t))
                        works = got == q;
                    else
                        works = got == t;
                }
                if (works) {
                    some_t = true;
                    break;
                }
            }
            if (!some_t) return false;
        } else {
            if (!tree.is_leaf(v) || !bp.uniform(v)) return false;
            TypeId t = bp.label(v, 0);
            if (TypeSystem::is_flexible(t)) return false;
            if (seen_singular[TypeSystem::affected_index(t)]++) return false;
        }
    }
    return std::all_of(seen_singular.begin(), seen_singular.end(), [](int c) { return c == 1; });
}

ImportantVertexRecord important_vertices(const Blueprint& bp) {
    ImportantVertexRecord rec;
    for (int v : bp.nodes()) {
        if (bp.children_in_tree(v) != 1) continue;
        int l = BracketTree::left(v), r = BracketTree::right(v);
        int u = bp.contains(l) ? l : r;
        int w = BracketTree::sibling(u);
        int changed = -1;
        for (int i = 0; i < bp.scenario_count(); ++i)
            if (bp.label(v, i) != bp.label(u, i)) {
                changed = i;
                break;
            }
        if (changed < 0)
            rec.j_tuples.push_back({u, v, w});
        else
            rec.k_tuples.push_back({u, v, w, changed});
    }
    return rec;
}

namespace {

// Builds blueprints bottom-up in continuation-passing style: gen(v, S, next) lays out the
// affected vertices in bitmask S below node v, writes the labels of v's subtree into `bp_`,
// and calls next() once per labeled variant while those labels are in place.
class Enumerator {
   public:
    Enumerator(const std::vector<Tournament>& digraphs, int leaves, const TypeSystem& types,
               const EnumerationOptions& options, const std::function<bool(const Blueprint&)>& visit)
        : f_(digraphs),
          types_(types),
          options_(options),
          visit_(visit),
          bp_(leaves, static_cast<int>(digraphs.size())),
          m_(static_cast<int>(digraphs.size())) {
        if (options.root_label) {
            TypeId t = *options.root_label;
            if (!TypeSystem::is_flexible(t)) anchor_bit_ = 1u << TypeSystem::affected_index(t);
        }
        for (TypeId t : types.flex_types()) {
            flex_.push_back(t);
            supply_.push_back(static_cast<int>(types.members(t).size()));
        }
        used_.assign(flex_.size(), 0);
        demand_.assign(flex_.size(), 0);
    }

    std::size_t run() {
        std::uint32_t all = types_.affected_count() == 32 ? ~0u : ((1u << types_.affected_count()) - 1);
        if (options_.search_steps) *options_.search_steps = 0;
        if (types_.affected_count() > bp_.leaf_count()) return 0;
        if (anchor_bit_ && options_.prune_infeasible && !all_placeable()) return 0;
        gen(BracketTree::root(), all, [&] {
            if (options_.root_label) {
                for (int i = 0; i < m_; ++i)
                    if (bp_.label(BracketTree::root(), i) != *options_.root_label) return;
            }
            ++count_;
            if (!visit_(bp_)) stopped_ = true;
        });
        if (options_.search_steps) *options_.search_steps = steps_;
        return count_;
    }

   private:
    using Next = std::function<void()>;

    // Subtrees holding the anchor (the required root label's own leaf) must carry it throughout.
    // Any other subtree at node v needs a label the anchor can still get rid of: a chain of
    // wins from the anchor down to it, no longer than the number of ancestors of v, through
    // types that can show up outside the subtree.
    bool admissible(int v, std::uint32_t set, const std::vector<TypeId>& tuple) const {
        if (set & anchor_bit_)
            return std::all_of(tuple.begin(), tuple.end(), [&](TypeId t) { return t == *options_.root_label; });
        if (!anchor_bit_ || !options_.prune_infeasible) return true;
        int rounds_left = bp_.tree().depth() - bp_.tree().height(v);
        for (int i = 0; i < m_; ++i)
            if (!reachable(*options_.root_label, tuple[i], set, rounds_left, f_[i])) return false;
        return true;
    }

    bool reachable(TypeId from, TypeId to, std::uint32_t set, int steps, const Tournament& f) const {
        int count = types_.type_count();
        std::uint64_t seen = 1ULL << from;
        std::vector<TypeId> layer{from};
        for (int step = 1; step <= steps && !layer.empty(); ++step) {
            std::vector<TypeId> next;
            for (TypeId x : layer) {
                if (f.beats(x, to)) return true;
                for (TypeId y = 0; y < count; ++y) {
                    if ((seen >> y) & 1ULL || !f.beats(x, y)) continue;
                    // A used-up flexible type may still sit on a sibling subtree built earlier.
                    bool available = TypeSystem::is_flexible(y) ? supply_[TypeSystem::flex_index(y)] > 0
                                                                : !((set >> TypeSystem::affected_index(y)) & 1u);
                    if (!available) continue;
                    seen |= 1ULL << y;
                    next.push_back(y);
                }
            }
            layer = std::move(next);
        }
        return false;
    }

    // Every player of a flexible type has to end up below some node whose label the anchor
    // can eventually eliminate: either as that label (a K leaf) or in a bag it beats.
    bool all_placeable() const {
        int count = types_.type_count();
        TypeId anchor = *options_.root_label;
        int weakest_first_bag = 0;
        std::vector<std::uint64_t> eliminable(m_, 0);
        for (int i = 0; i < m_; ++i) {
            std::uint64_t seen = 1ULL << anchor;
            std::vector<TypeId> stack{anchor};
            while (!stack.empty()) {
                TypeId x = stack.back();
                stack.pop_back();
                for (TypeId y = 0; y < count; ++y)
                    if (!((seen >> y) & 1ULL) && f_[i].beats(x, y)) {
                        seen |= 1ULL << y;
                        stack.push_back(y);
                    }
            }
            eliminable[i] = seen;
            int first_bag = static_cast<int>(flex_.size());
            for (TypeId x = 0; x < count; ++x) {
                if (!((seen >> x) & 1ULL)) continue;
                for (int q = 0; q < first_bag; ++q)
                    if (flex_[q] == x || f_[i].beats(x, flex_[q])) {
                        first_bag = q;
                        break;
                    }
            }
            weakest_first_bag = std::max(weakest_first_bag, first_bag);
        }
        for (int q = 0; q < weakest_first_bag; ++q) {
            if (supply_[q] == 0) continue;
            bool as_label = std::any_of(eliminable.begin(), eliminable.end(),
                                        [&](std::uint64_t e) { return (e >> flex_[q]) & 1ULL; });
            if (!as_label) return false;
        }
        return true;
    }

    // Leaves in bags s, s+1, ... only take players of those types; demands only grow and
    // supplies only shrink as the blueprint fills in.
    bool packable() const {
        long long demand = 0, supply = 0;
        for (int s = static_cast<int>(flex_.size()) - 1; s >= 0; --s) {
            demand += demand_[s];
            supply += supply_[s] - used_[s];
            if (demand > supply || supply_[s] < used_[s]) return false;
        }
        return true;
    }

    void gen(int v, std::uint32_t set, const Next& next) {
        if (stopped_) return;
        const BracketTree& tree = bp_.tree();
        int h = tree.height(v);
        if (h == 0) {
            TypeId t = TypeSystem::singular_type(std::countr_zero(set));
            if (!admissible(v, set, std::vector<TypeId>(m_, t))) return;
            ++steps_;
                bp_.add_node(v);
            bp_.set_labels(v, std::vector<TypeId>(m_, t));
            next();
            bp_.remove_node(v);
            return;
        }
        int half = 1 << (h - 1);
        int size = std::popcount(set);
        int l = BracketTree::left(v), r = BracketTree::right(v);

        if (size <= half) {
            gen(l, set, [&] {
                std::vector<TypeId> below = bp_.labels(l);
                // Keeping the label comes first; a change to t uses up one player of type t.
                std::vector<std::pair<std::vector<TypeId>, TypeId>> outcomes{{below, -1}};
                for (TypeId t : flex_) {
                    std::vector<TypeId> tuple(m_);
                    for (int i = 0; i < m_; ++i) tuple[i] = match(below[i], t, f_[i]);
                    if (tuple != below) outcomes.emplace_back(std::move(tuple), t);
                }
                long long sibling_leaves = 1LL << (h - 1);
                for (const auto& [tuple, t] : outcomes) {
                    if (stopped_) return;
                    if (!admissible(v, set, tuple)) continue;
                    // Bag and player use of the important vertex hanging off v.
                    int bag = -1, used = -1;
                    long long need = sibling_leaves;
                    if (t >= 0) {
                        bag = used = TypeSystem::flex_index(t);
                        need -= 1;
                    } else if (auto q = strongest_beaten_flex(tuple, types_, f_)) {
                        bag = TypeSystem::flex_index(*q);
                    } else if (options_.prune_infeasible) {
                        continue;
                    }
                    if (bag >= 0) demand_[bag] += need;
                    if (used >= 0) ++used_[used];
                    if (!options_.prune_infeasible || packable()) {
                        ++steps_;
                bp_.add_node(v);
                        bp_.set_labels(v, tuple);
                        next();
                        bp_.remove_node(v);
                    }
                    if (bag >= 0) demand_[bag] -= need;
                    if (used >= 0) --used_[used];
                }
            });
        }

        if (size < 2) return;
        std::uint32_t low = set & (~set + 1);
        std::uint32_t rest = set ^ low;
        // S1 = low plus any subset of the rest, S2 nonempty.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t s1 = low | sub;
            std::uint32_t s2 = set ^ s1;
            if (s2 != 0 && std::popcount(s1) <= half && std::popcount(s2) <= half) {
                gen(l, s1, [&] {
                    gen(r, s2, [&] {
                        std::vector<TypeId> tuple(m_);
                        for (int i = 0; i < m_; ++i) tuple[i] = match(bp_.label(l, i), bp_.label(r, i), f_[i]);
                        if (!admissible(v, set, tuple)) return;
                        ++steps_;
                bp_.add_node(v);
                        bp_.set_labels(v, tuple);
                        next();
                        bp_.remove_node(v);
                    });
                });
            }
            if (stopped_ || sub == 0) break;
        }
    }

    const std::vector<Tournament>& f_;
    const TypeSystem& types_;
    const EnumerationOptions& options_;
    const std::function<bool(const Blueprint&)>& visit_;
    Blueprint bp_;
    int m_;
    std::vector<TypeId> flex_;
    std::vector<int> supply_, used_;
    std::vector<long long> demand_;
    std::uint32_t anchor_bit_ = 0;
    std::size_t count_ = 0;
    std::size_t steps_ = 0;
    bool stopped_ = false;
};

}  // namespace

std::size_t enumerate_blueprints(const std::vector<Tournament>& type_digraphs, int leaves, const TypeSystem& types,
                                 const EnumerationOptions& options,
                                 const std::function<bool(const Blueprint&)>& visit) {
    if (types.affected_count() > options.max_affected)
        throw CapExceeded(std::to_string(types.affected_count()) + " affected vertices exceed the blueprint cap of " +
                          std::to_string(options.max_affected) + "; raise the k cap");
    if (types.affected_count() > 31) throw CapExceeded("more than 31 affected vertices");
    Enumerator e(type_digraphs, leaves, types, options, visit);
    return e.run();
}

int type_changes_on_path(const BracketLabeling& labeling, int leaf) {
    int changes = 0;
    for (int v = leaf; v > 1; v = BracketTree::parent(v))
        if (labeling.label[v] != labeling.label[BracketTree::parent(v)]) ++changes;
    return changes;
}

}  // namespace tfix
