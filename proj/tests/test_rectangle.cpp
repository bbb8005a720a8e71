#include <doctest.h>

#include <algorithm>

#include "sympath/oracle.hpp"
#include "sympath/rectangle.hpp"
#include "sympath/solver.hpp"
#include "test_helpers.hpp"

using namespace sympath;
using namespace sympath_test;

namespace {

std::vector<SpaceTimeNode> barrier_nodes(const std::vector<Constraint>& set) {
    auto nodes = std::get<BarrierConstraint>(set.at(0).body).nodes;
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

}  // namespace

TEST_CASE("whole-path rectangle: the worked barrier pair comes out exactly") {
    Instance inst = fixtures::small_crossing();
    const GridMap& map = inst.map();
    std::vector<Path> plan{
        path_of(map, {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}}),
        path_of(map, {{1, 2}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {4, 4}, {5, 4}}),
    };
    ReasoningContext ctx(inst, {}, plan);
    Conflict c{false, 0, 1, map.vertex(2, 2), kNoVertex, 1};
    auto finding = detect_rectangle_entire(c, ctx);
    REQUIRE(finding.has_value());
    CHECK(finding->rs == SpaceTimeNode{map.vertex(2, 2), 1});
    CHECK(finding->rg == SpaceTimeNode{map.vertex(3, 4), 4});
    CHECK(finding->r1 == SpaceTimeNode{map.vertex(2, 4), 3});
    CHECK(finding->r2 == SpaceTimeNode{map.vertex(3, 2), 2});
    // Exit borders: two nodes along the far row for a1, three down the far
    // column for a2, at the times a shortest path reaches them.
    std::vector<SpaceTimeNode> expect1{{map.vertex(2, 4), 3}, {map.vertex(3, 4), 4}};
    std::vector<SpaceTimeNode> expect2{
        {map.vertex(3, 2), 2}, {map.vertex(3, 3), 3}, {map.vertex(3, 4), 4}};
    CHECK(barrier_nodes(finding->set1) == expect1);
    CHECK(barrier_nodes(finding->set2) == expect2);
    CHECK(finding->cardinality == Cardinality::cardinal);

    auto report = oracle::verify_mutually_disjunctive(inst, 0, 1, finding->set1, finding->set2);
    CHECK(report.verdict == oracle::Verdict::disjunctive);
}

TEST_CASE("agents moving opposite ways along an axis are rejected") {
    GridMap map = fixtures::open_map(6, 6);
    Vertex s1 = map.vertex(0, 2), g1 = map.vertex(5, 3);
    Vertex s2 = map.vertex(5, 2), g2 = map.vertex(0, 3);
    Instance inst(std::move(map), {{s1, g1}, {s2, g2}});
    const GridMap& m = inst.map();
    std::vector<Path> plan{
        path_of(m, {{0, 2}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {4, 3}, {5, 3}}),
        path_of(m, {{5, 2}, {4, 2}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {0, 3}}),
    };
    ReasoningContext ctx(inst, {}, plan);
    Conflict c{false, 0, 1, m.vertex(2, 2), kNoVertex, 2};
    CHECK(!detect_rectangle_entire(c, ctx).has_value());
}

TEST_CASE("square crossing resolves in one rectangle split at +1") {
    Instance inst = fixtures::square_crossing(4);
    SolverConfig config = SolverConfig::from_name("r");
    CbsSolver solver(inst, config);
    auto result = solver.solve();
    REQUIRE(result.stats.solved);
    CHECK(result.stats.soc == result.stats.root_cost + 1);
    CHECK(result.stats.expanded == 1);
    CHECK(result.stats.branches_by_class[static_cast<size_t>(SymmetryClass::rectangle)] == 1);
}

TEST_CASE("segment rectangles anchor at interior singletons when paths are not "
          "Manhattan-optimal") {
    // A forced wait stretches the line agent's path beyond its Manhattan
    // length, so whole-path detection fails while the segment between its
    // post-wait singleton and target still forms a rectangle.
    GridMap map = fixtures::open_map(7, 7);
    Vertex s1 = map.vertex(2, 1), g1 = map.vertex(3, 5);
    Vertex s2 = map.vertex(1, 3), g2 = map.vertex(6, 3);
    Instance inst(std::move(map), {{s1, g1}, {s2, g2}});
    const GridMap& m = inst.map();
    std::vector<Constraint> base{{1, VertexConstraint{m.vertex(3, 3), 2}}};
    std::vector<Path> plan{
        path_of(m, {{2, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}}),
        path_of(m, {{1, 3}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}}),
    };
    ReasoningContext ctx(inst, base, plan);
    Conflict c{false, 0, 1, m.vertex(3, 3), kNoVertex, 3};
    CHECK(ctx.classify(c) != Cardinality::cardinal);
    CHECK(!detect_rectangle_entire(c, ctx).has_value());

    auto finding = detect_rectangle_segments(c, ctx);
    REQUIRE(finding.has_value());
    // Anchored at the forced-wait singleton ((2,3), 2).
    CHECK(finding->rs == SpaceTimeNode{m.vertex(2, 3), 2});
    CHECK(finding->rg == SpaceTimeNode{m.vertex(3, 3), 3});
    for (const auto& n : barrier_nodes(finding->set1)) CHECK(ctx.mdd(0).contains(n.v, n.t));
    for (const auto& n : barrier_nodes(finding->set2)) CHECK(ctx.mdd(1).contains(n.v, n.t));

    auto report =
        oracle::verify_mutually_disjunctive(inst, 0, 1, finding->set1, finding->set2, base);
    CHECK(report.verdict == oracle::Verdict::disjunctive);
}

TEST_CASE("segment detection equals whole-path detection on open grids") {
    for (int n : {4, 5, 6}) {
        Instance inst = fixtures::square_crossing(n);
        SolverConfig r = SolverConfig::from_name("r");
        SolverConfig rm = SolverConfig::from_name("rm");
        CbsSolver solver_r(inst, r);
        CbsSolver solver_rm(inst, rm);
        auto res_r = solver_r.solve();
        auto res_rm = solver_rm.solve();
        REQUIRE(res_r.stats.solved);
        REQUIRE(res_rm.stats.solved);
        CHECK(res_r.stats.soc == res_rm.stats.soc);
        CHECK(res_r.stats.expanded == res_rm.stats.expanded);
    }
}

namespace {

// Wide-area analog of the "no useful singletons" case: the second agent is
// one step behind in start sum and a row of timed bans forces it to spend one
// wait above the conflicting area, after which both agents time every cell of
// the area identically.
struct WideArea {
    Instance inst;
    std::vector<Constraint> base;
    std::vector<Path> plan;
    Conflict conflict;
};

WideArea wide_area_fixture() {
    GridMap map = fixtures::open_map(9, 9);
    Vertex s1 = map.vertex(0, 1), g1 = map.vertex(5, 6);
    Vertex s2 = map.vertex(2, 0), g2 = map.vertex(5, 8);
    Instance inst(std::move(map), {{s1, g1}, {s2, g2}});
    const GridMap& m = inst.map();
    std::vector<Constraint> base;
    for (int x = 2; x <= 5; x++) base.push_back({1, VertexConstraint{m.vertex(x, 1), x - 1}});
    std::vector<Path> plan{
        path_of(m, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {4, 4}, {4, 5},
                    {4, 6}, {5, 6}}),
        path_of(m, {{2, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {4, 4}, {4, 5},
                    {4, 6}, {4, 7}, {4, 8}, {5, 8}}),
    };
    Conflict c{false, 0, 1, m.vertex(4, 4), kNoVertex, 7};
    return {std::move(inst), std::move(base), std::move(plan), c};
}

}  // namespace

TEST_CASE("generalized rectangle finds a wide conflicting area without singletons") {
    WideArea fx = wide_area_fixture();
    ReasoningContext ctx(fx.inst, fx.base, fx.plan);
    const GridMap& m = fx.inst.map();

    // The delayed agent's MDD has no interior singletons, so the segment
    // technique has nothing to anchor at.
    CHECK(ctx.mdd(1).singletons().size() == 2);

    auto gr = find_conflicting_area(fx.conflict, ctx);
    REQUIRE(gr.has_value());
    // The area spans columns 2..5 and rows 1..6, timed x + y - 1.
    CHECK(gr->area.size() == 24);
    for (const auto& [v, t] : gr->area) {
        CHECK(m.x_of(v) >= 2);
        CHECK(m.x_of(v) <= 5);
        CHECK(m.y_of(v) >= 1);
        CHECK(m.y_of(v) <= 6);
        CHECK(t == m.x_of(v) + m.y_of(v) - 1);
    }
    CHECK(!gr->entrances1.empty());
    CHECK(!gr->entrances2.empty());

    auto finding = detect_rectangle_generalized(fx.conflict, ctx);
    REQUIRE(finding.has_value());
    CHECK(finding->cardinality == Cardinality::cardinal);
    CHECK(finding->rs == SpaceTimeNode{m.vertex(2, 1), 2});
    CHECK(finding->rg == SpaceTimeNode{m.vertex(5, 6), 10});
    // Exit borders: the right column for the first agent, the bottom row for
    // the second; both entirely on the MDDs.
    for (const auto& n : barrier_nodes(finding->set1)) {
        CHECK(m.x_of(n.v) == 5);
        CHECK(ctx.mdd(0).contains(n.v, n.t));
    }
    for (const auto& n : barrier_nodes(finding->set2)) {
        CHECK(m.y_of(n.v) == 6);
        CHECK(ctx.mdd(1).contains(n.v, n.t));
    }

    auto report = oracle::verify_mutually_disjunctive(fx.inst, 0, 1, finding->set1,
                                                      finding->set2, fx.base);
    CHECK(report.verdict == oracle::Verdict::disjunctive);
}

TEST_CASE("generalized rectangle solves the wide-area node in one split") {
    WideArea fx = wide_area_fixture();
    SolverConfig gr = SolverConfig::from_name("gr");
    CbsSolver solver(fx.inst, gr);
    auto result = solver.solve(fx.base);
    REQUIRE(result.stats.solved);

    SolverConfig none = SolverConfig::from_name("none");
    CbsSolver baseline(fx.inst, none);
    auto expect = baseline.solve(fx.base);
    REQUIRE(expect.stats.solved);
    CHECK(result.stats.soc == expect.stats.soc);
    CHECK(result.stats.soc == result.stats.root_cost + 1);
    CHECK(result.stats.expanded <= 2);
    CHECK(result.stats.branches_by_class[static_cast<size_t>(SymmetryClass::rectangle)] >= 1);
}

TEST_CASE("border scan rejects an agent entering from both sides") {
    GridMap map = fixtures::open_map(5, 5);
    GeneralizedRectangle gr;
    for (int x = 1; x <= 3; x++)
        for (int y = 1; y <= 3; y++) gr.area[map.vertex(x, y)] = x + y;
    gr.entrances1.push_back({{map.vertex(0, 2), 2}, {map.vertex(1, 2), 3}});
    gr.entrances1.push_back({{map.vertex(4, 2), 4}, {map.vertex(3, 2), 5}});
    gr.entrances2.push_back({{map.vertex(2, 0), 2}, {map.vertex(2, 1), 3}});
    CHECK(!scan_border_and_holes(gr, map).has_value());

    // Confined to one side each, the scan succeeds.
    gr.entrances1.pop_back();
    auto border = scan_border_and_holes(gr, map);
    REQUIRE(border.has_value());
    CHECK(border->rs == SpaceTimeNode{map.vertex(1, 1), 2});
    CHECK(border->rg == SpaceTimeNode{map.vertex(3, 3), 6});
}

TEST_CASE("holes shared by both agents void the rectangle") {
    GridMap map = fixtures::open_map(5, 5);
    GeneralizedRectangle ring;
    // 3x3 block minus the center: a ring with one hole.
    for (int x = 1; x <= 3; x++)
        for (int y = 1; y <= 3; y++)
            if (!(x == 2 && y == 2)) ring.area[map.vertex(x, y)] = x + y;
    ring.entrances1.push_back({{map.vertex(0, 2), 2}, {map.vertex(1, 2), 3}});
    ring.entrances2.push_back({{map.vertex(2, 0), 2}, {map.vertex(2, 1), 3}});
    // Entrances out of the hole: first for one agent only, then for both.
    ring.entrances1.push_back({{map.vertex(2, 2), 4}, {map.vertex(2, 3), 5}});
    CHECK(scan_border_and_holes(ring, map).has_value());
    ring.entrances2.push_back({{map.vertex(2, 2), 2}, {map.vertex(2, 1), 3}});
    CHECK(!scan_border_and_holes(ring, map).has_value());
}

TEST_CASE("barriers that do not block the current paths are not emitted") {
    WideArea fx = wide_area_fixture();
    // Reroute the first agent around the area entirely: the gate must fail.
    const GridMap& m = fx.inst.map();
    fx.plan[0] = path_of(m, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 7},
                             {2, 7}, {3, 7}, {4, 7}, {5, 7}, {5, 6}});
    ReasoningContext ctx(fx.inst, fx.base, fx.plan);
    CHECK(!detect_rectangle_generalized(fx.conflict, ctx).has_value());
}
