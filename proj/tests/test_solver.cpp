#include <doctest.h>

#include <random>

#include "sympath/oracle.hpp"
#include "sympath/solver.hpp"
#include "test_helpers.hpp"

using namespace sympath;
using namespace sympath_test;

namespace {

SolveResult solve_with(const Instance& inst, const std::string& config_name,
                       double time_limit = 20.0) {
    SolverConfig config = SolverConfig::from_name(config_name);
    config.time_limit_seconds = time_limit;
    CbsSolver solver(inst, config);
    return solver.solve();
}

void check_solution(const Instance& inst, const SolveResult& result) {
    REQUIRE(result.stats.solved);
    REQUIRE(static_cast<int>(result.paths.size()) == inst.num_agents());
    int soc = 0;
    for (int a = 0; a < inst.num_agents(); a++) {
        CHECK(result.paths[a].front() == inst.agent(a).start);
        CHECK(result.paths[a].back() == inst.agent(a).target);
        soc += path_length(result.paths[a]);
    }
    CHECK(soc == result.stats.soc);
    CHECK(detect_conflicts(result.paths).empty());
}

}  // namespace

TEST_CASE("single agent solves at the root") {
    GridMap map = fixtures::open_map(5, 5);
    Vertex s = map.vertex(0, 0), g = map.vertex(4, 3);
    Instance inst(std::move(map), {{s, g}});
    auto result = solve_with(inst, "none");
    check_solution(inst, result);
    CHECK(result.stats.soc == 7);
    CHECK(result.stats.expanded <= 1);
}

TEST_CASE("square crossing solves to one above the individual optima") {
    for (const char* config : {"none", "r", "rm", "gr", "rtc"}) {
        Instance inst = fixtures::square_crossing(4);
        auto result = solve_with(inst, config);
        check_solution(inst, result);
        CHECK(result.stats.soc == result.stats.root_cost + 1);
    }
}

TEST_CASE("head-on corridor solves to the root cost plus 4") {
    for (const char* config : {"none", "c", "gc", "rtc"}) {
        Instance inst = fixtures::head_on_corridor(3);
        auto result = solve_with(inst, config);
        check_solution(inst, result);
        CHECK(result.stats.soc == result.stats.root_cost + 4);
    }
}

TEST_CASE("every config matches the joint-state oracle on random instances") {
    // Desk-scale slice of the full acceptance sweep.
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 25; trial++) {
        const int agents = 2 + static_cast<int>(rng() % 3);
        Instance inst = fixtures::random_instance(8, 8, 13, agents, rng());
        auto truth = oracle::joint_state_astar(inst);
        REQUIRE(truth.solved);
        for (const char* config : {"none", "t", "gc", "gr", "rtc", "cbsh2"}) {
            auto result = solve_with(inst, config);
            INFO("config ", config, " trial ", trial);
            check_solution(inst, result);
            CHECK(result.stats.soc == truth.soc);
            CHECK(result.stats.max_f <= truth.soc);      // admissibility
            CHECK(result.stats.monotone_costs);          // child cost >= parent
        }
    }
}

TEST_CASE("timeouts and node limits report unsolved with partial stats") {
    Instance inst = fixtures::head_on_corridor(7);
    SolverConfig config = SolverConfig::from_name("none");
    config.node_limit = 3;
    CbsSolver solver(inst, config);
    auto result = solver.solve();
    CHECK(!result.stats.solved);
    CHECK(result.stats.status == SolveStatus::node_limit_reached);
    CHECK(result.stats.expanded == 3);

    SolverConfig timed = SolverConfig::from_name("none");
    timed.time_limit_seconds = 0.0;
    CbsSolver slow(inst, timed);
    auto timed_result = slow.solve();
    CHECK(!timed_result.stats.solved);
    CHECK(timed_result.stats.status == SolveStatus::timeout);
}

TEST_CASE("provably unsolvable instances report infeasible") {
    GridMap map = fixtures::grid_from_rows({".."});
    Instance inst(std::move(map), {{0, 1}, {1, 0}});
    auto result = solve_with(inst, "none");
    CHECK(!result.stats.solved);
    CHECK(result.stats.status == SolveStatus::infeasible);
}

TEST_CASE("root constraints seed the solve") {
    Instance inst = fixtures::parked_blocker(3);
    std::vector<Constraint> root{{1, LengthLowerConstraint{3}}};
    SolverConfig config = SolverConfig::from_name("none");
    CbsSolver solver(inst, config);
    auto result = solver.solve(root);
    REQUIRE(result.stats.solved);
    CHECK(path_length(result.paths[1]) > 3);
}

TEST_CASE("split observer sees every emitted constraint-set pair") {
    Instance inst = fixtures::square_crossing(5);
    SolverConfig config = SolverConfig::from_name("rtc");
    CbsSolver solver(inst, config);
    int splits = 0;
    solver.set_split_observer([&](const Conflict&, SymmetryClass cls,
                                  const std::vector<Constraint>&,
                                  const std::vector<Constraint>& s1,
                                  const std::vector<Constraint>& s2) {
        splits++;
        CHECK(!s1.empty());
        CHECK(!s2.empty());
        (void)cls;
    });
    auto result = solver.solve();
    CHECK(result.stats.solved);
    CHECK(static_cast<uint64_t>(splits) == result.stats.expanded);
}

TEST_CASE("cbsh2 weighted heuristic never underestimates to suboptimality") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; trial++) {
        Instance inst = fixtures::random_instance(7, 7, 8, 3, rng());
        auto truth = oracle::joint_state_astar(inst);
        REQUIRE(truth.solved);
        auto result = solve_with(inst, "cbsh2");
        check_solution(inst, result);
        CHECK(result.stats.soc == truth.soc);
    }
}
