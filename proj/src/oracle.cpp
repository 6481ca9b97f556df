#include "tfix/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "tfix/errors.hpp"
#include "tfix/parallel.hpp"

namespace tfix {

namespace {

void check_cap(int n, const OracleOptions& options) {
    if (n > options.max_n)
        throw CapExceeded("oracle limited to n <= " + std::to_string(options.max_n) + " (got " + std::to_string(n) +
                          ")");
}

// Fills slots [first, first + size) from `pool`; the left half always holds the smallest player.
bool split_fill(std::vector<int>& pool, Seeding& out, int first, int size,
                const std::function<bool()>& next) {
    if (size == 1) {
        out[first] = pool.front();
        return next();
    }
    int half = size / 2;
    int smallest = pool.front();
    std::vector<int> rest(pool.begin() + 1, pool.end());
    int r = static_cast<int>(rest.size());
    // Choose half-1 companions for the smallest player, in lexicographic order of positions.
    std::vector<int> pick(half - 1);
    for (int i = 0; i < half - 1; ++i) pick[i] = i;
    while (true) {
        std::vector<int> left{smallest}, right;
        std::vector<char> chosen(r, 0);
        for (int i : pick) chosen[i] = 1;
        for (int i = 0; i < r; ++i) (chosen[i] ? left : right).push_back(rest[i]);
        bool go_on = split_fill(left, out, first, half,
                                [&] { return split_fill(right, out, first + half, half, next); });
        if (!go_on) return false;
        int i = half - 2;
        while (i >= 0 && pick[i] == r - (half - 1) + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < half - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

}  // namespace

void for_each_seeding(int n, bool symmetry_reduction, const std::function<bool(const Seeding&)>& visit) {
    Seeding s = identity_seeding(n);
    if (!symmetry_reduction) {
        do {
            if (!visit(s)) return;
        } while (std::next_permutation(s.begin(), s.end()));
        return;
    }
    std::vector<int> pool = s;
    Seeding out(n);
    split_fill(pool, out, 0, n, [&] { return visit(out); });
}

std::vector<Seeding> all_seedings(int n, bool symmetry_reduction) {
    std::vector<Seeding> out;
    for_each_seeding(n, symmetry_reduction, [&](const Seeding& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

OracleReport oracle_stf(const StfInstance& instance, const OracleOptions& options) {
    check_cap(instance.size(), options);
    std::vector<Seeding> seedings = all_seedings(instance.size(), options.symmetry_reduction);
    auto wins = [&](std::size_t i) {
        for (const auto& t : instance.tournaments())
            if (evaluate_bracket(seedings[i], t).winner() != instance.favorite()) return false;
        return true;
    };
    OracleReport report;
    if (auto hit = parallel_find_first(seedings.size(), options.threads, wins, options.deterministic)) {
        report.yes = true;
        report.witness = seedings[*hit];
    }
    return report;
}

OracleReport oracle_ptf(const ProbabilityInstance& instance, const OracleOptions& options) {
    check_cap(instance.size(), options);
    std::vector<Seeding> seedings = all_seedings(instance.size(), options.symmetry_reduction);
    std::vector<Rational> value(seedings.size());
    parallel_find_first(seedings.size(), options.threads, [&](std::size_t i) {
        value[i] = win_probability(seedings[i], instance)[instance.favorite()];
        return false;
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < seedings.size(); ++i)
        if (value[i] > value[best]) best = i;
    OracleReport report;
    report.best_probability = value[best];
    report.yes = value[best] >= instance.target();
    if (report.yes) report.witness = seedings[best];
    return report;
}

}  // namespace tfix
