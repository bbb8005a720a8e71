#include <doctest.h>

#include <random>

#include "sympath/oracle.hpp"
#include "test_helpers.hpp"

using namespace sympath;
using namespace sympath_test;

TEST_CASE("joint A* on a single agent returns the true distance") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; trial++) {
        Instance inst = fixtures::random_instance(6, 6, 8, 1, rng());
        auto result = oracle::joint_state_astar(inst);
        REQUIRE(result.solved);
        CHECK(result.soc == inst.distance(inst.agent(0).start, inst.agent(0).target));
    }
}

TEST_CASE("square crossing costs one extra step over the individual optima") {
    Instance inst = fixtures::square_crossing(4);
    const int sic = inst.distance(inst.agent(0).start, inst.agent(0).target) +
                    inst.distance(inst.agent(1).start, inst.agent(1).target);
    auto result = oracle::joint_state_astar(inst);
    REQUIRE(result.solved);
    CHECK(result.soc == sic + 1);
    // The returned solution must itself be conflict-free and consistent.
    REQUIRE(result.paths.size() == 2);
    CHECK(!paths_conflict(result.paths[0], result.paths[1]));
    CHECK(path_length(result.paths[0]) + path_length(result.paths[1]) == result.soc);
}

TEST_CASE("head-on corridor costs the root cost plus 4") {
    Instance inst = fixtures::head_on_corridor(3);
    const int sic = inst.distance(inst.agent(0).start, inst.agent(0).target) +
                    inst.distance(inst.agent(1).start, inst.agent(1).target);
    auto result = oracle::joint_state_astar(inst);
    REQUIRE(result.solved);
    CHECK(result.soc == sic + 4);
}

TEST_CASE("one-edge squeeze costs the root cost plus 2") {
    Instance inst = fixtures::one_edge_squeeze();
    const int sic = inst.distance(inst.agent(0).start, inst.agent(0).target) +
                    inst.distance(inst.agent(1).start, inst.agent(1).target);
    auto result = oracle::joint_state_astar(inst);
    REQUIRE(result.solved);
    CHECK(result.soc == sic + 2);
}

TEST_CASE("infeasible joint instances are reported") {
    // Two agents trading places on a bare 2-cell map can never pass.
    GridMap map = fixtures::grid_from_rows({".."});
    Instance inst(std::move(map), {{0, 1}, {1, 0}});
    auto result = oracle::joint_state_astar(inst, 40);
    CHECK(!result.solved);
    CHECK(result.infeasible);
}

TEST_CASE("path enumeration matches a closed form on the open grid") {
    GridMap map = fixtures::open_map(4, 4);
    Vertex s = map.vertex(0, 0), g = map.vertex(2, 2);
    Instance inst(std::move(map), {{s, g}});
    auto exact = oracle::enumerate_paths(inst, 0, 4, 100000);
    REQUIRE(exact.has_value());
    CHECK(exact->size() == 6);  // all Manhattan shuffles, no slack
    for (const auto& p : *exact) {
        CHECK(p.front() == s);
        CHECK(p.back() == g);
    }
    auto budget = oracle::enumerate_paths(inst, 0, 8, 10);
    CHECK(!budget.has_value());
}

TEST_CASE("standard split constraints are mutually disjunctive") {
    Instance inst = fixtures::square_crossing(4);
    const Vertex v = inst.map().vertex(1, 1);
    std::vector<Constraint> set1{{0, VertexConstraint{v, 1}}};
    std::vector<Constraint> set2{{1, VertexConstraint{v, 1}}};
    auto report = oracle::verify_mutually_disjunctive(inst, 0, 1, set1, set2);
    CHECK(report.verdict == oracle::Verdict::disjunctive);
    CHECK(report.pairs_checked > 0);
}

TEST_CASE("corridor range constraints are mutually disjunctive") {
    Instance inst = fixtures::head_on_corridor(3);
    const GridMap& map = inst.map();
    std::vector<Constraint> set1{{0, RangeConstraint{cell(map, 3, 2), 0, 7}}};
    std::vector<Constraint> set2{{1, RangeConstraint{cell(map, 0, 2), 0, 7}}};
    auto report = oracle::verify_mutually_disjunctive(inst, 0, 1, set1, set2);
    CHECK(report.verdict == oracle::Verdict::disjunctive);
}

TEST_CASE("entrance-side range constraints are caught as not disjunctive") {
    // Constraining the entry endpoints instead of the exits admits a
    // conflict-free pair that violates both; the checker must find one.
    Instance inst = fixtures::head_on_corridor(3);
    const GridMap& map = inst.map();
    std::vector<Constraint> set1{{0, RangeConstraint{cell(map, 0, 2), 0, 7}}};
    std::vector<Constraint> set2{{1, RangeConstraint{cell(map, 3, 2), 0, 7}}};
    auto report = oracle::verify_mutually_disjunctive(inst, 0, 1, set1, set2, 5);
    CHECK(report.verdict == oracle::Verdict::counterexample);
    CHECK(!paths_conflict(report.path1, report.path2));
}

TEST_CASE("length constraint splits are exhaustive and exclusive") {
    Instance inst = fixtures::parked_blocker(3);
    std::vector<Constraint> set1{{1, LengthLowerConstraint{3}}};
    std::vector<Constraint> set2{{1, LengthUpperConstraint{3}}};
    auto report = oracle::verify_mutually_disjunctive(inst, 0, 1, set1, set2);
    CHECK(report.verdict == oracle::Verdict::disjunctive);
    // Every path of the bound agent satisfies exactly one side.
    auto paths = oracle::enumerate_paths(inst, 1, 6, 100000);
    REQUIRE(paths.has_value());
    for (const auto& p : *paths) {
        const bool lower = path_length(p) > 3;
        const bool upper = path_length(p) <= 3;
        CHECK(lower != upper);
    }
}
