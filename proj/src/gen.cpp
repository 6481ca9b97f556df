#include "tfix/gen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "tfix/errors.hpp"

namespace tfix {

namespace {

std::vector<std::string> player_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    return names;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Arc> random_pairs(std::mt19937_64& rng, int n, int count) {
    std::vector<Arc> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    if (count > static_cast<int>(all.size())) throw ValidationError("more pairs requested than exist");
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

// Transitive tournament on a random order with `flips` random arcs reversed.
Tournament noisy_order(std::mt19937_64& rng, int n, int flips) {
    std::vector<PlayerId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Tournament t = Tournament::transitive(order);
    for (auto [u, v] : random_pairs(rng, n, flips)) t.reverse(u, v);
    return t;
}

void check_spec(const GenSpec& spec) {
    if (!is_power_of_two(spec.n)) throw ValidationError("n must be a power of 2");
    if (spec.scenarios < 1 || spec.private_pairs < 0 || spec.fractional_pairs < 0 || spec.back_arcs < 0)
        throw ValidationError("generator counts must be nonnegative (scenarios >= 1)");
}

}  // namespace

StfInstance gen_random_stf(const GenSpec& spec) {
    check_spec(spec);
    if (spec.scenarios > 1 && (spec.private_pairs >= 31 || spec.scenarios > (1 << spec.private_pairs)))
        throw ValidationError("need 2^private_pairs >= scenarios");
    std::mt19937_64 rng(spec.seed);
    int n = spec.n;
    Tournament base = noisy_order(rng, n, spec.back_arcs);
    std::uniform_int_distribution<PlayerId> pick_player(0, n - 1);
    PlayerId favorite = pick_player(rng);
    if (spec.scenarios == 1) return StfInstance(player_names(n), {base}, favorite);

    std::vector<Arc> pairs = random_pairs(rng, n, spec.private_pairs);
    int p = spec.private_pairs;
    std::uint32_t full = (1u << p) - 1;
    // Distinct orientation patterns in which every chosen pair varies.
    std::vector<std::uint32_t> patterns;
    while (true) {
        std::set<std::uint32_t> chosen;
        while (static_cast<int>(chosen.size()) < spec.scenarios)
            chosen.insert(static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(full))));
        std::uint32_t all_and = full, any_or = 0;
        for (auto c : chosen) {
            all_and &= c;
            any_or |= c;
        }
        if (all_and == 0 && any_or == full) {
            patterns.assign(chosen.begin(), chosen.end());
            std::shuffle(patterns.begin(), patterns.end(), rng);
            break;
        }
    }
    std::vector<Tournament> scenarios;
    for (auto pattern : patterns) {
        Tournament t = base;
        for (int b = 0; b < p; ++b) {
            auto [u, v] = pairs[b];
            bool u_wins = (pattern >> b) & 1u;
            if (t.beats(u, v) != u_wins) t.reverse(u, v);
        }
        scenarios.push_back(std::move(t));
    }
    return StfInstance(player_names(n), std::move(scenarios), favorite);
}

ProbabilityInstance gen_random_ptf(const GenSpec& spec) {
    check_spec(spec);
    std::mt19937_64 rng(spec.seed);
    int n = spec.n;
    Tournament base = noisy_order(rng, n, spec.back_arcs);
    std::uniform_int_distribution<PlayerId> pick_player(0, n - 1);
    PlayerId favorite = pick_player(rng);

    std::vector<Rational> matrix(static_cast<std::size_t>(n) * n, Rational(0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) matrix[static_cast<std::size_t>(u) * n + v] = base.beats(u, v) ? 1 : 0;
    for (auto [u, v] : random_pairs(rng, n, spec.fractional_pairs)) {
        int den = uniform(rng, 2, 64);
        int num = uniform(rng, 1, den - 1);
        Rational p(num, den);
        p.canonicalize();
        matrix[static_cast<std::size_t>(u) * n + v] = p;
        matrix[static_cast<std::size_t>(v) * n + u] = 1 - p;
    }
    int den = uniform(rng, 1, 64);
    Rational target(uniform(rng, 0, den), den);
    target.canonicalize();
    return ProbabilityInstance(player_names(n), std::move(matrix), std::move(target), favorite);
}

StfInstance hardness_stf_from_tf(const std::vector<std::string>& players, const Tournament& tournament,
                                 PlayerId favorite) {
    std::vector<PlayerId> order{favorite};
    for (PlayerId p = 0; p < tournament.size(); ++p)
        if (p != favorite) order.push_back(p);
    return StfInstance(players, {tournament, Tournament::transitive(order)}, favorite);
}

}  // namespace tfix
