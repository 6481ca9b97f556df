#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tfix/bracket.hpp"
#include "tfix/instance.hpp"
#include "tfix/rational.hpp"
#include "tfix/stf_solver.hpp"

namespace tfix {

/// One way of resolving every fractional match, with its exact probability.
struct Completion {
    Tournament tournament;
    Rational probability;
};

/// A nonempty set of completions (indices into the completion list) and its total probability.
struct Event {
    std::vector<int> members;
    Rational weight;
};

/// All 2^k completions of the certainty digraph; bit b of the index orients the b-th fractional
/// pair (pairs ordered by (u, v), u < v) as u -> v when set.
/// Throws CapExceeded when the degree of uncertainty exceeds `max_uncertainty`.
std::vector<Completion> enumerate_completions(const ProbabilityInstance& instance, int max_uncertainty = 4);

/// Inclusion-minimal events with weight >= target, in increasing order of member bitmask.
/// Stops when `visit` returns false.
void enumerate_minimal_events(const std::vector<Completion>& completions, const Rational& target,
                              const std::function<bool(const Event&)>& visit);

/// Every nonempty event with weight >= target, in increasing order of member bitmask.
void enumerate_all_events(const std::vector<Completion>& completions, const Rational& target,
                          const std::function<bool(const Event&)>& visit);

enum class EventMode { minimal, full };

struct PtfOptions {
    int max_uncertainty = 4;
    EventMode events = EventMode::minimal;
    StfOptions stf;
    int threads = 1;
    /// With several threads, report the first event in enumeration order that succeeds.
    bool deterministic = true;
};

struct PtfVerdict {
    bool yes = false;
    std::optional<Seeding> witness;
    /// Exact win probability of the witness; always >= target on yes.
    std::optional<Rational> achieved;
    std::size_t events_tested = 0;
};

/// Decides whether some seeding lets the favorite win with probability >= target by solving
/// STF on events of sufficient weight. Throws CapExceeded on oversized parameters.
PtfVerdict solve_ptf(const ProbabilityInstance& instance, const PtfOptions& options = {});

/// STF instance over the given completions with the PTF favorite.
StfInstance event_instance(const ProbabilityInstance& instance, const std::vector<Completion>& completions,
                           const Event& event);

}  // namespace tfix
