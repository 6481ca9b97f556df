#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tfix/rational.hpp"

namespace tfix {

using PlayerId = int;
using Arc = std::pair<PlayerId, PlayerId>;

/// Simple digraph on players 0..n-1 with at most one arc per unordered pair.
class Digraph {
   public:
    Digraph() = default;
    explicit Digraph(int n);

    int size() const { return n_; }
    bool has_arc(PlayerId u, PlayerId v) const { return adj_[index(u, v)] != 0; }
    /// Adds uv. Throws ValidationError on self-arcs or when vu is already present.
    void add_arc(PlayerId u, PlayerId v);
    void remove_arc(PlayerId u, PlayerId v);
    int arc_count() const;
    std::vector<Arc> arcs() const;
    /// Exactly one arc between every pair.
    bool is_tournament() const;
    bool has_cycle() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

   private:
    std::size_t index(PlayerId u, PlayerId v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Complete orientation of all player pairs.
class Tournament {
   public:
    Tournament() = default;
    /// Throws ValidationError unless `graph` has exactly one arc per pair.
    explicit Tournament(Digraph graph);

    /// Transitive tournament where order[0] beats everyone after it, and so on.
    static Tournament transitive(const std::vector<PlayerId>& order);

    int size() const { return graph_.size(); }
    bool beats(PlayerId u, PlayerId v) const { return graph_.has_arc(u, v); }
    void reverse(PlayerId u, PlayerId v);
    const Digraph& graph() const { return graph_; }

    friend bool operator==(const Tournament&, const Tournament&) = default;
    friend auto operator<=>(const Tournament& a, const Tournament& b) { return a.key() <=> b.key(); }

   private:
    std::vector<std::uint8_t> key() const;

    Digraph graph_;
};

bool is_power_of_two(int n);

/// PTF instance: exact pairwise win probabilities, target p*, favorite.
class ProbabilityInstance {
   public:
    ProbabilityInstance(std::vector<std::string> players, std::vector<Rational> matrix, Rational target,
                        PlayerId favorite);

    int size() const { return static_cast<int>(players_.size()); }
    const std::vector<std::string>& players() const { return players_; }
    const Rational& prob(PlayerId u, PlayerId v) const { return matrix_[static_cast<std::size_t>(u) * size() + v]; }
    const Rational& target() const { return target_; }
    PlayerId favorite() const { return favorite_; }
    const std::vector<Rational>& matrix() const { return matrix_; }

    ProbabilityInstance with_target(Rational target) const;

   private:
    std::vector<std::string> players_;
    std::vector<Rational> matrix_;
    Rational target_;
    PlayerId favorite_;
};

/// STF instance: scenario tournaments over one player list. TF is the m = 1 case.
/// Duplicate tournaments are dropped on construction, keeping first occurrences.
class StfInstance {
   public:
    StfInstance(std::vector<std::string> players, std::vector<Tournament> tournaments, PlayerId favorite);

    int size() const { return static_cast<int>(players_.size()); }
    int scenario_count() const { return static_cast<int>(tournaments_.size()); }
    const std::vector<std::string>& players() const { return players_; }
    const std::vector<Tournament>& tournaments() const { return tournaments_; }
    const Tournament& tournament(int i) const { return tournaments_[i]; }
    PlayerId favorite() const { return favorite_; }

   private:
    std::vector<std::string> players_;
    std::vector<Tournament> tournaments_;
    PlayerId favorite_;
};

struct InstanceParameters {
    Digraph shared_arcs;
    int private_arc_count = 0;
    int shared_fas_size = 0;
    int degree_of_uncertainty = 0;
    int certainty_fas_size = 0;
};

enum class InstanceKind { tf, stf, ptf };

using AnyInstance = std::variant<ProbabilityInstance, StfInstance>;

InstanceKind parse_kind(std::string_view text);
std::string_view to_string(InstanceKind kind);

/// Parses the JSON instance format. `expected` rejects files of another kind.
AnyInstance parse_instance(std::string_view text);
AnyInstance parse_instance(std::string_view text, InstanceKind expected);

std::string serialize(const ProbabilityInstance& instance);
/// Writes kind "tf" when there is a single tournament, "stf" otherwise.
std::string serialize(const StfInstance& instance);

PlayerId find_player(const std::vector<std::string>& players, std::string_view name);

/// Arc uv exactly when P[u][v] = 1.
Digraph certainty_digraph(const ProbabilityInstance& instance);
/// Number of pairs with a fractional entry.
int degree_of_uncertainty(const ProbabilityInstance& instance);

/// Shared arcs (intersection of all scenarios), private-arc count and shared FAS size.
InstanceParameters shared_structure(const StfInstance& instance);
/// Certainty digraph, degree of uncertainty and certainty FAS size.
InstanceParameters certainty_structure(const ProbabilityInstance& instance);

}  // namespace tfix
