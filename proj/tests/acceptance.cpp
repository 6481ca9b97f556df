// Acceptance suite. Usage: tfix_acceptance [criterion...]; no arguments runs all ten.
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

#include "suites.hpp"
#include "tfix/assignment.hpp"
#include "tfix/blueprint.hpp"
#include "tfix/bracket.hpp"
#include "tfix/fas.hpp"
#include "tfix/gen.hpp"
#include "tfix/oracle.hpp"
#include "tfix/ptf_solver.hpp"
#include "tfix/stf_solver.hpp"
#include "tfix/typesys.hpp"

using namespace tfix;
using namespace tfix::testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

StfOptions wide_stf() {
    StfOptions o;
    o.max_k = 12;
    return o;
}

PtfOptions wide_ptf(EventMode mode = EventMode::minimal) {
    PtfOptions o;
    o.stf = wide_stf();
    o.events = mode;
    return o;
}

constexpr int suite1_size = 540;
constexpr int suite2_size = 320;

Outcome stf_equivalence() {
    auto t0 = Clock::now();
    auto suite = stf_suite(suite1_size);
    int mismatches = 0, yes = 0, max_k = 0;
    for (const auto& inst : suite) {
        StfVerdict v = solve_stf(inst, wide_stf());
        OracleReport o = oracle_stf(inst);
        max_k = std::max(max_k, v.params.shared_fas_size + v.params.private_arc_count);
        if (v.yes != o.yes) ++mismatches;
        if (v.yes) {
            ++yes;
            if (!v.witness || !favorite_wins_all(*v.witness, inst)) ++mismatches;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << suite.size() << " instances (" << yes << " yes, max k " << max_k << "), " << mismatches << " mismatches, "
      << secs << " s";
    return {mismatches == 0 && secs < 600, d.str()};
}

Outcome ptf_equivalence() {
    auto t0 = Clock::now();
    auto suite = ptf_suite(suite2_size);
    int mismatches = 0, short_witness = 0, yes = 0;
    for (const auto& inst : suite) {
        PtfVerdict v = solve_ptf(inst, wide_ptf());
        OracleReport o = oracle_ptf(inst);
        if (v.yes != o.yes) ++mismatches;
        if (v.yes) {
            ++yes;
            if (!v.witness) {
                ++short_witness;
                continue;
            }
            Rational achieved = win_probability(*v.witness, inst)[inst.favorite()];
            if (achieved < inst.target() || !v.achieved || *v.achieved != achieved) ++short_witness;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << suite.size() << " instances (" << yes << " yes), " << mismatches << " verdict mismatches, " << short_witness
      << " bad witnesses, " << secs << " s";
    return {mismatches == 0 && short_witness == 0 && secs < 900, d.str()};
}

Outcome tf_single_scenario() {
    int mismatches = 0, checked = 0;
    for (const auto& t : all_tournaments(4))
        for (PlayerId fav = 0; fav < 4; ++fav) {
            StfInstance inst(names(4), {t}, fav);
            if (solve_stf(inst, wide_stf()).yes != oracle_stf(inst).yes) ++mismatches;
            ++checked;
        }
    std::mt19937_64 rng(77);
    StfOptions wide;
    wide.max_k = 28;
    for (int i = 0; i < 100; ++i) {
        Tournament t = random_tournament(8, rng);
        PlayerId fav = static_cast<PlayerId>(rng() % 8);
        StfInstance inst(names(8), {t}, fav);
        if (solve_stf(inst, wide).yes != oracle_stf(inst).yes) ++mismatches;
        ++checked;
    }
    std::ostringstream d;
    d << checked << " TF instances (all labeled 4-player tournaments x favorites, 100 random n=8), " << mismatches
      << " mismatches";
    return {mismatches == 0, d.str()};
}

Outcome blueprint_round_trip() {
    auto suite = stf_suite(suite1_size);
    int forward = 0, backward = 0, solvable = 0;
    std::size_t feasible_blueprints = 0;
    for (const auto& inst : suite) {
        StfAnalysis a = analyze(inst, wide_stf());
        EnumerationOptions eo;
        eo.root_label = a.types.type_of(inst.favorite());
        eo.max_affected = inst.size();
        std::unordered_set<Blueprint, BlueprintHash> stream;
        enumerate_blueprints(a.type_digraphs, inst.size(), a.types, eo, [&](const Blueprint& bp) {
            stream.insert(bp);
            auto record = important_vertices(bp);
            auto system = build_assignment(bp, record, a.types, a.type_digraphs);
            if (!system) return true;
            auto x = solve_assignment(*system);
            if (!x) return true;
            ++feasible_blueprints;
            Seeding s = reconstruct_seeding(bp, *x, *system, a.types);
            if (!favorite_wins_all(s, inst)) ++backward;
            return true;
        });
        OracleReport o = oracle_stf(inst);
        if (!o.yes) continue;
        ++solvable;
        Blueprint bp = blueprint_of_seeding(*o.witness, a.types, a.type_digraphs);
        if (!stream.contains(bp)) {
            ++forward;
            continue;
        }
        auto system = build_assignment(bp, important_vertices(bp), a.types, a.type_digraphs);
        if (!system || !solve_assignment(*system)) ++forward;
    }
    std::ostringstream d;
    d << solvable << " solvable instances: " << forward << " witness blueprints missing or infeasible; "
      << feasible_blueprints << " feasible blueprints: " << backward << " reconstructions failing";
    return {forward == 0 && backward == 0, d.str()};
}

Outcome normalization() {
    std::mt19937_64 rng(4242);
    int bad = 0;
    const int sizes[] = {2, 4, 8, 16};
    for (int i = 0; i < 1000; ++i) {
        GenSpec spec;
        spec.n = sizes[i % 4];
        int pairs = spec.n * (spec.n - 1) / 2;
        spec.fractional_pairs = std::uniform_int_distribution<int>(0, pairs)(rng);
        spec.back_arcs = std::uniform_int_distribution<int>(0, pairs)(rng);
        spec.seed = 90000 + static_cast<std::uint64_t>(i);
        ProbabilityInstance inst = gen_random_ptf(spec);
        Seeding s = identity_seeding(spec.n);
        std::shuffle(s.begin(), s.end(), rng);
        Rational total = 0;
        for (const auto& p : win_probability(s, inst)) total += p;
        if (total != 1) ++bad;
    }
    std::ostringstream d;
    d << "1000 (seeding, instance) pairs with n in {2,4,8,16}, " << bad << " sums differing from 1";
    return {bad == 0, d.str()};
}

Outcome type_change_bound() {
    auto suite = stf_suite(suite1_size);
    int violations = 0, paths = 0, corrected_violations = 0;
    std::string first;
    for (const auto& inst : suite) {
        StfVerdict v = solve_stf(inst, wide_stf());
        if (!v.yes) continue;
        StfAnalysis a = analyze(inst, wide_stf());
        int k = a.k();
        int bound = 2 * k * (k + 1);
        int corrected = (k + 1) * a.types.type_count() - 1;
        Seeding typed(v.witness->size());
        for (std::size_t i = 0; i < typed.size(); ++i) typed[i] = a.types.type_of((*v.witness)[i]);
        BracketTree tree(inst.size());
        for (int i = 0; i < inst.scenario_count(); ++i) {
            BracketLabeling lab = evaluate_types_bracket(typed, a.type_digraphs[i]);
            for (int pos = 0; pos < inst.size(); ++pos) {
                int changes = type_changes_on_path(lab, tree.leaf_node(pos));
                ++paths;
                if (changes > corrected) ++corrected_violations;
                if (changes > bound) {
                    if (violations == 0) {
                        std::ostringstream f;
                        f << "e.g. n=" << inst.size() << " k=" << k << ": " << changes << " changes > " << bound;
                        first = f.str();
                    }
                    ++violations;
                }
            }
        }
    }
    std::ostringstream d;
    d << paths << " witness paths checked against 2k(k+1): " << violations << " violations";
    if (!first.empty()) d << " (" << first << ")";
    d << "; against (k+1)|Types|-1: " << corrected_violations << " violations";
    return {violations == 0, d.str()};
}

Outcome hardness_construction() {
    int mismatches = 0, nonzero_fas = 0, checked = 0;
    for (const auto& t : all_tournaments(4))
        for (PlayerId fav = 0; fav < 4; ++fav) {
            StfInstance tf(names(4), {t}, fav);
            StfInstance stf = hardness_stf_from_tf(names(4), t, fav);
            if (oracle_stf(tf).yes != oracle_stf(stf).yes) ++mismatches;
            if (shared_structure(stf).shared_fas_size != 0) ++nonzero_fas;
            ++checked;
        }
    std::ostringstream d;
    d << checked << " TF instances: " << mismatches << " verdict changes, " << nonzero_fas << " with shared FAS > 0";
    return {mismatches == 0 && nonzero_fas == 0, d.str()};
}

Outcome event_pruning() {
    auto suite = ptf_suite(suite2_size);
    int mismatches = 0, compared = 0;
    for (const auto& inst : suite) {
        if (degree_of_uncertainty(inst) > 3) continue;
        ++compared;
        if (solve_ptf(inst, wide_ptf(EventMode::minimal)).yes != solve_ptf(inst, wide_ptf(EventMode::full)).yes)
            ++mismatches;
    }
    std::ostringstream d;
    d << compared << " instances: " << mismatches << " minimal/full disagreements";
    return {mismatches == 0, d.str()};
}

// Stream length is the number of blueprints enumerate_blueprints yields with the favorite at
// the root (all of them feasible after pruning). Counts are cut off at `stream_cap` per
// instance; a capped mean is a lower bound. Solver effort (node labelings
// tried by solve_stf, which stops at the first feasible blueprint) and wall time are
// reported alongside.
Outcome scaling() {
    const int sizes[] = {4, 8, 16, 32};
    constexpr int seeds = 8;
    constexpr std::size_t stream_cap = 1'000'000;
    std::map<int, double> stream_mean, steps_mean, time_mean;
    std::map<int, int> yes_count;
    std::map<int, bool> capped;
    for (int n : sizes) {
        double stream = 0, steps = 0, secs = 0;
        int runs = 0;
        for (int s = 0; s < seeds; ++s) {
            GenSpec spec;
            spec.n = n;
            spec.scenarios = 2;
            spec.private_pairs = 1;
            spec.back_arcs = 2;
            spec.seed = 7000 + static_cast<std::uint64_t>(s);
            StfInstance generated = gen_random_stf(spec);
            StfInstance strong(generated.players(), generated.tournaments(), copeland_leader(generated));
            for (const StfInstance* inst : {&generated, &strong}) {
                auto t0 = Clock::now();
                StfVerdict v = solve_stf(*inst, wide_stf());
                secs += seconds_since(t0);
                steps += static_cast<double>(v.search_steps);
                yes_count[n] += v.yes;
                ++runs;

                StfAnalysis a = analyze(*inst, wide_stf());
                EnumerationOptions eo;
                eo.root_label = a.types.type_of(inst->favorite());
                eo.max_affected = 2 * wide_stf().max_k + 1;
                std::size_t length = 0;
                enumerate_blueprints(a.type_digraphs, n, a.types, eo,
                                     [&](const Blueprint&) { return ++length < stream_cap; });
                if (length >= stream_cap) capped[n] = true;
                stream += static_cast<double>(length);
            }
        }
        stream_mean[n] = stream / runs;
        steps_mean[n] = steps / runs;
        time_mean[n] = secs / runs;
    }
    bool ok = true;
    std::ostringstream d;
    d.precision(4);
    for (int n : sizes) {
        d << "n=" << n << ": stream " << (capped[n] ? ">=" : "") << stream_mean[n];
        if (n > 4) {
            double ratio = stream_mean[n] / std::max(1.0, stream_mean[n / 2]);
            d << " (x" << (capped[n] ? ">=" : "") << ratio << ")";
            if (ratio >= 32) ok = false;
        }
        d << ", solver steps " << steps_mean[n] << ", " << time_mean[n] * 1000 << " ms, " << yes_count[n] << "/"
          << 2 * seeds << " yes";
        if (n < 32) d << "; ";
    }
    return {ok, d.str()};
}

// Exhaustive integer search for the assignment system.
bool exhaustive_feasible(const AssignmentInstance& inst) {
    int f = inst.flex_count();
    std::vector<long long> left = inst.supply;
    std::function<bool(int, int, long long)> go = [&](int s, int t, long long need) -> bool {
        if (s == f) {
            for (long long c : left)
                if (c != 0) return false;
            return true;
        }
        if (t == f) return need == 0 && go(s + 1, 0, s + 1 < f ? inst.demand[s + 1] : 0);
        if (inst.is_forbidden(s, t)) return go(s, t + 1, need);
        for (long long x = 0; x <= std::min(need, left[t]); ++x) {
            left[t] -= x;
            bool ok = go(s, t + 1, need - x);
            left[t] += x;
            if (ok) return true;
        }
        return false;
    };
    return go(0, 0, f > 0 ? inst.demand[0] : 0);
}

std::vector<long long> random_composition(std::mt19937_64& rng, int parts, int total) {
    std::vector<long long> out(parts, 0);
    for (int i = 0; i < total; ++i) ++out[std::uniform_int_distribution<int>(0, parts - 1)(rng)];
    return out;
}

Outcome assignment_equivalence() {
    std::mt19937_64 rng(31337);
    int mismatches = 0, bad_witness = 0, feasible = 0;
    for (int i = 0; i < 1200; ++i) {
        int f = std::uniform_int_distribution<int>(1, 4)(rng);
        int total = std::uniform_int_distribution<int>(0, 12)(rng);
        auto demand = random_composition(rng, f, total);
        int supply_total = (rng() % 5 == 0) ? std::uniform_int_distribution<int>(0, 12)(rng) : total;
        auto supply = random_composition(rng, f, supply_total);
        AssignmentInstance inst = make_assignment_instance(demand, supply);
        if (rng() % 2 == 0) {
            std::fill(inst.forbidden.begin(), inst.forbidden.end(), 0);
            for (int s = 0; s < f; ++s)
                for (int t = 0; t < f; ++t)
                    if (rng() % 10 < 3) inst.forbid(s, t);
        }
        auto x = solve_assignment(inst);
        bool truth = exhaustive_feasible(inst);
        if (x.has_value() != truth) ++mismatches;
        if (x) {
            ++feasible;
            if (!satisfies(inst, *x)) ++bad_witness;
        }
    }
    std::ostringstream d;
    d << "1200 systems (" << feasible << " feasible): " << mismatches << " mismatches, " << bad_witness
      << " invalid witnesses";
    return {mismatches == 0 && bad_witness == 0, d.str()};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

const Criterion criteria[] = {
    {"STF solver agrees with brute force", stf_equivalence},
    {"PTF solver agrees with brute force", ptf_equivalence},
    {"TF as single-scenario STF", tf_single_scenario},
    {"blueprint round trip", blueprint_round_trip},
    {"win probabilities sum to one", normalization},
    {"type changes per path within 2k(k+1)", type_change_bound},
    {"hardness construction preserves verdicts", hardness_construction},
    {"minimal events match full event enumeration", event_pruning},
    {"blueprint stream scaling at fixed k", scaling},
    {"assignment solver agrees with exhaustive search", assignment_equivalence},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= 10; ++i) which.push_back(i);
    int failed = 0;
    for (int c : which) {
        if (c < 1 || c > 10) {
            std::cerr << "no criterion " << c << '\n';
            return 2;
        }
        auto t0 = Clock::now();
        Outcome o = criteria[c - 1].run();
        std::printf("criterion %2d %s: %s -- %s [%.2fs]\n", c, o.pass ? "PASS" : "FAIL", criteria[c - 1].name,
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
