#pragma once

#include <optional>

#include "sympath/reasoning_context.hpp"

namespace sympath {

struct RectangleFinding {
    SpaceTimeNode rs, rg, r1, r2;
    Cardinality cardinality = Cardinality::non_cardinal;
    std::vector<SpaceTimeNode> barrier1, barrier2;  // exit borders of a1 / a2
    std::vector<Constraint> set1, set2;             // the barrier constraints
};

/// Technique for whole paths: both agents Manhattan-optimal and moving the
/// same way along both axes. Barriers span the full exit borders.
std::optional<RectangleFinding> detect_rectangle_entire(const Conflict& c,
                                                        ReasoningContext& ctx);

/// Technique for path segments between MDD singletons; barrier nodes are
/// restricted to the agent's MDD.
std::optional<RectangleFinding> detect_rectangle_segments(const Conflict& c,
                                                          ReasoningContext& ctx);

/// Conflicting area for the generalized technique: every cell that appears at
/// exactly one timestep in both agents' MDDs, agreeing on that timestep, grown
/// from the conflict cell. Entrances are MDD edges crossing into the area.
struct GeneralizedRectangle {
    std::unordered_map<Vertex, int> area;  // cell -> timestep
    struct Entrance {
        SpaceTimeNode from, to;
    };
    std::vector<Entrance> entrances1, entrances2;
};

std::optional<GeneralizedRectangle> find_conflicting_area(const Conflict& c,
                                                          ReasoningContext& ctx);

struct GrBorder {
    SpaceTimeNode rs, rg, r1, r2;
    std::vector<SpaceTimeNode> barrier1, barrier2;
};

/// Walks the outer border of the conflicting area, checks that each agent
/// enters from its own side and that no hole admits both agents, and returns
/// the corner nodes plus the exit-border segments.
std::optional<GrBorder> scan_border_and_holes(const GeneralizedRectangle& gr,
                                              const GridMap& map);

/// Full generalized-rectangle pipeline for a semi-/non-cardinal vertex
/// conflict; cardinality comes from MDD cuts.
std::optional<RectangleFinding> detect_rectangle_generalized(const Conflict& c,
                                                             ReasoningContext& ctx);

}  // namespace sympath
