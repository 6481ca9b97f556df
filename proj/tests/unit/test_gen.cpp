#include "../suites.hpp"
#include "doctest.h"
#include "tfix/errors.hpp"
#include "tfix/fas.hpp"
#include "tfix/gen.hpp"
#include "tfix/oracle.hpp"

using namespace tfix;
using namespace tfix::testing;

TEST_CASE("transitive output") {
    GenSpec spec;
    spec.n = 8;
    spec.seed = 5;
    StfInstance inst = gen_random_stf(spec);
    CHECK(inst.scenario_count() == 1);
    CHECK(shared_structure(inst).shared_fas_size == 0);
    CHECK(inst.players().front() == "p1");
}

TEST_CASE("one private pair over two scenarios") {
    GenSpec spec;
    spec.n = 8;
    spec.scenarios = 2;
    spec.private_pairs = 1;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        spec.seed = seed;
        StfInstance inst = gen_random_stf(spec);
        CHECK(inst.scenario_count() == 2);
        CHECK(shared_structure(inst).private_arc_count == 1);
    }
}

TEST_CASE("shared FAS stays within the flipped arcs") {
    for (int back = 0; back <= 4; ++back)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            GenSpec spec;
            spec.n = seed % 2 ? 8 : 16;
            spec.scenarios = 1 + static_cast<int>(seed % 3);
            spec.private_pairs = spec.scenarios == 1 ? 0 : 2;
            spec.back_arcs = back;
            spec.seed = seed;
            CHECK(shared_structure(gen_random_stf(spec)).shared_fas_size <= back);
            GenSpec p = spec;
            p.fractional_pairs = 2;
            CHECK(certainty_structure(gen_random_ptf(p)).certainty_fas_size <= back);
        }
}

TEST_CASE("same seed, same bytes") {
    GenSpec spec;
    spec.n = 16;
    spec.scenarios = 3;
    spec.private_pairs = 3;
    spec.back_arcs = 2;
    spec.fractional_pairs = 3;
    spec.seed = 99;
    CHECK(serialize(gen_random_stf(spec)) == serialize(gen_random_stf(spec)));
    CHECK(serialize(gen_random_ptf(spec)) == serialize(gen_random_ptf(spec)));
    GenSpec other = spec;
    other.seed = 100;
    CHECK(serialize(gen_random_stf(spec)) != serialize(gen_random_stf(other)));
}

TEST_CASE("random probability instances") {
    GenSpec spec;
    spec.n = 8;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        spec.seed = seed;
        spec.fractional_pairs = static_cast<int>(seed % 4);
        ProbabilityInstance inst = gen_random_ptf(spec);
        CHECK(degree_of_uncertainty(inst) == spec.fractional_pairs);
        CHECK(inst.target() >= 0);
        CHECK(inst.target() <= 1);
        CHECK(inst.target().get_den() <= 64);
        for (const auto& p : inst.matrix()) CHECK(p.get_den() <= 64);
        auto back = parse_instance(serialize(inst), InstanceKind::ptf);
        CHECK(serialize(std::get<ProbabilityInstance>(back)) == serialize(inst));
    }
}

TEST_CASE("stf round trip") {
    for (const auto& inst : stf_suite(40, 10000)) {
        auto back = parse_instance(serialize(inst));
        CHECK(serialize(std::get<StfInstance>(back)) == serialize(inst));
    }
}

TEST_CASE("invalid specs") {
    GenSpec spec;
    spec.n = 6;
    CHECK_THROWS_AS(gen_random_stf(spec), ValidationError);
    spec.n = 4;
    spec.scenarios = 3;
    spec.private_pairs = 1;
    CHECK_THROWS_AS(gen_random_stf(spec), ValidationError);
}

TEST_CASE("hardness construction") {
    for (const auto& t : all_tournaments(4))
        for (PlayerId fav = 0; fav < 4; ++fav) {
            StfInstance stf = hardness_stf_from_tf(names(4), t, fav);
            REQUIRE(stf.scenario_count() >= 1);
            CHECK(stf.tournament(0) == t);
            const Tournament& d2 = stf.tournaments().back();
            for (PlayerId p = 0; p < 4; ++p)
                if (p != fav) CHECK(d2.beats(fav, p));
            CHECK_FALSE(d2.graph().has_cycle());
            CHECK(shared_structure(stf).shared_fas_size == 0);
            CHECK(oracle_stf(stf).yes == oracle_stf(StfInstance(names(4), {t}, fav)).yes);
        }
}
