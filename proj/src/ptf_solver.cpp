#include "tfix/ptf_solver.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>

#include "tfix/errors.hpp"
#include "tfix/parallel.hpp"

namespace tfix {

std::vector<Completion> enumerate_completions(const ProbabilityInstance& instance, int max_uncertainty) {
    int n = instance.size();
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!is_integral(instance.prob(u, v))) pairs.emplace_back(u, v);
    int k = static_cast<int>(pairs.size());
    if (k > max_uncertainty)
        throw CapExceeded("degree of uncertainty " + std::to_string(k) + " exceeds the cap " +
                          std::to_string(max_uncertainty) +
                          "; the reduction costs 2^(2^k) STF calls, raise the cap with u=...");

    Digraph base = certainty_digraph(instance);
    std::vector<Completion> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        Digraph g = base;
        Rational p(1);
        for (int b = 0; b < k; ++b) {
            auto [u, v] = pairs[b];
            if (mask & (1u << b)) {
                g.add_arc(u, v);
                p *= instance.prob(u, v);
            } else {
                g.add_arc(v, u);
                p *= instance.prob(v, u);
            }
        }
        out.push_back({Tournament(std::move(g)), p});
    }
    return out;
}

namespace {

template <typename Accept>
void scan_events(const std::vector<Completion>& completions, const Rational& target, Accept accept,
                 const std::function<bool(const Event&)>& visit) {
    int c = static_cast<int>(completions.size());
    if (c > 20) throw CapExceeded("too many completions for event enumeration");
    std::uint32_t limit = 1u << c;
    std::vector<Rational> weight(limit);
    std::vector<Rational> lightest(limit);
    weight[0] = 0;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        int b = std::countr_zero(low);
        std::uint32_t rest = mask ^ low;
        weight[mask] = weight[rest] + completions[b].probability;
        lightest[mask] = rest == 0 ? completions[b].probability : std::min(lightest[rest], completions[b].probability);
        if (weight[mask] < target) continue;
        if (!accept(rest == 0, weight[mask], lightest[mask])) continue;
        Event e;
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i)) e.members.push_back(i);
        e.weight = weight[mask];
        if (!visit(e)) return;
    }
}

}  // namespace

void enumerate_minimal_events(const std::vector<Completion>& completions, const Rational& target,
                              const std::function<bool(const Event&)>& visit) {
    // Minimal: dropping the lightest member already falls below the target (singletons always qualify).
    scan_events(
        completions, target,
        [&](bool singleton, const Rational& w, const Rational& lightest) { return singleton || w - lightest < target; },
        visit);
}

void enumerate_all_events(const std::vector<Completion>& completions, const Rational& target,
                          const std::function<bool(const Event&)>& visit) {
    scan_events(completions, target, [](bool, const Rational&, const Rational&) { return true; }, visit);
}

StfInstance event_instance(const ProbabilityInstance& instance, const std::vector<Completion>& completions,
                           const Event& event) {
    std::vector<Tournament> tournaments;
    for (int i : event.members) tournaments.push_back(completions[i].tournament);
    return StfInstance(instance.players(), std::move(tournaments), instance.favorite());
}

PtfVerdict solve_ptf(const ProbabilityInstance& instance, const PtfOptions& options) {
    PtfVerdict verdict;
    if (instance.target() == 0) {
        verdict.yes = true;
        verdict.witness = identity_seeding(instance.size());
        verdict.achieved = win_probability(*verdict.witness, instance)[instance.favorite()];
        return verdict;
    }

    std::vector<Completion> completions = enumerate_completions(instance, options.max_uncertainty);
    std::vector<Event> events;
    auto collect = [&](const Event& e) {
        events.push_back(e);
        return true;
    };
    if (options.events == EventMode::minimal)
        enumerate_minimal_events(completions, instance.target(), collect);
    else
        enumerate_all_events(completions, instance.target(), collect);

    std::vector<std::optional<Seeding>> found(events.size());
    std::mutex guard;
    std::size_t tested = 0;
    auto hit = parallel_find_first(events.size(), options.threads, [&](std::size_t i) {
        StfVerdict v = solve_stf(event_instance(instance, completions, events[i]), options.stf);
        std::lock_guard lock(guard);
        ++tested;
        if (v.yes) found[i] = v.witness;
        return v.yes;
    }, options.deterministic);
    verdict.events_tested = tested;
    if (!hit) return verdict;

    verdict.yes = true;
    verdict.witness = found[*hit];
    verdict.achieved = win_probability(*verdict.witness, instance)[instance.favorite()];
    if (*verdict.achieved < instance.target())
        throw InternalError("PTF witness achieves less than the target probability");
    return verdict;
}

}  // namespace tfix
