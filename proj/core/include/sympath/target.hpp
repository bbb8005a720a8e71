#pragma once

#include <optional>

#include "sympath/reasoning_context.hpp"

namespace sympath {

struct TargetFinding {
    int finished_agent = -1;  // parked at its target when the conflict happens
    int other_agent = -1;
    int t = -1;  // conflict timestep, >= length of finished agent's path
    Cardinality cardinality = Cardinality::semi_cardinal;
    std::vector<Constraint> set1;  // { length > t } for the finished agent
    std::vector<Constraint> set2;  // { length <= t }, bars others from its target
};

/// A vertex conflict at or after one agent's arrival at its target. The
/// finding's split resolves the whole family of wait-and-collide-again
/// resolutions in one branching step.
std::optional<TargetFinding> detect_target_conflict(const Conflict& c, ReasoningContext& ctx);

}  // namespace sympath
