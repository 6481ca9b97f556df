#include <set>

#include "../suites.hpp"
#include "doctest.h"
#include "tfix/errors.hpp"
#include "tfix/oracle.hpp"
#include "tfix/ptf_solver.hpp"

using namespace tfix;
using namespace tfix::testing;

TEST_CASE("two players") {
    StfInstance agree(names(2), {Tournament::transitive({0, 1})}, 0);
    CHECK(oracle_stf(agree).yes);
    StfInstance split(names(2), {Tournament::transitive({0, 1}), Tournament::transitive({1, 0})}, 0);
    CHECK_FALSE(oracle_stf(split).yes);

    std::vector<Rational> m = {Rational(0), Rational(7, 10), Rational(3, 10), Rational(0)};
    OracleReport r = oracle_ptf(ProbabilityInstance(names(2), m, Rational(7, 10), 0));
    CHECK(r.yes);
    CHECK(*r.best_probability == Rational(7, 10));
    OracleReport r2 = oracle_ptf(ProbabilityInstance(names(2), m, Rational(71, 100), 0));
    CHECK_FALSE(r2.yes);
    CHECK(*r2.best_probability == Rational(7, 10));
}

TEST_CASE("seeding counts") {
    CHECK(all_seedings(4, true).size() == 3);
    CHECK(all_seedings(4, false).size() == 24);
    CHECK(all_seedings(8, true).size() == 315);
    std::set<Seeding> distinct;
    for (const auto& s : all_seedings(4, false)) {
        CHECK(is_bijective(s, 4));
        distinct.insert(s);
    }
    CHECK(distinct.size() == 24);
}

TEST_CASE("symmetry reduction keeps verdicts") {
    OracleOptions full;
    full.symmetry_reduction = false;
    for (const auto& inst : stf_suite(200, 9000)) {
        if (inst.size() != 4) continue;
        CHECK(oracle_stf(inst).yes == oracle_stf(inst, full).yes);
    }
    for (const auto& inst : ptf_suite(100, 9001)) {
        if (inst.size() != 4) continue;
        CHECK(*oracle_ptf(inst).best_probability == *oracle_ptf(inst, full).best_probability);
    }
}

TEST_CASE("best probability against completions times seedings") {
    for (const auto& inst : ptf_suite(120, 9100)) {
        if (inst.size() != 4) continue;
        auto cs = enumerate_completions(inst);
        Rational best = 0;
        for (const auto& s : all_seedings(4, false)) {
            Rational p = 0;
            for (const auto& c : cs)
                if (evaluate_bracket(s, c.tournament).winner() == inst.favorite()) p += c.probability;
            best = std::max(best, p);
        }
        OracleReport r = oracle_ptf(inst);
        CHECK(*r.best_probability == best);
        CHECK(r.yes == (best >= inst.target()));
        if (r.witness) CHECK(win_probability(*r.witness, inst)[inst.favorite()] == best);
    }
}

TEST_CASE("integral matrices give probability 0 or 1") {
    for (const auto& inst : ptf_suite(80, 9200)) {
        if (degree_of_uncertainty(inst) != 0) continue;
        Rational b = *oracle_ptf(inst).best_probability;
        CHECK(((b == 0) || (b == 1)));
    }
}

TEST_CASE("witnesses win") {
    for (const auto& inst : stf_suite(60, 9300)) {
        OracleReport r = oracle_stf(inst);
        if (r.yes)
            for (const auto& t : inst.tournaments()) CHECK(evaluate_bracket(*r.witness, t).winner() == inst.favorite());
    }
}

TEST_CASE("threads") {
    OracleOptions four;
    four.threads = 4;
    for (const auto& inst : stf_suite(40, 9400)) {
        OracleReport a = oracle_stf(inst), b = oracle_stf(inst, four);
        CHECK(a.yes == b.yes);
        CHECK(a.witness == b.witness);
    }
    for (const auto& inst : ptf_suite(20, 9401)) CHECK(*oracle_ptf(inst).best_probability == *oracle_ptf(inst, four).best_probability);
}

TEST_CASE("player cap") {
    GenSpec spec;
    spec.n = 16;
    CHECK_THROWS_AS(oracle_stf(gen_random_stf(spec)), CapExceeded);
}
