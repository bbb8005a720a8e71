#pragma once

#include "sympath/mdd.hpp"
#include "sympath/path.hpp"

namespace sympath {

enum class Cardinality { non_cardinal = 0, semi_cardinal = 1, cardinal = 2 };

enum class SymmetryClass { vertex_edge = 0, rectangle = 1, corridor = 2, target = 3 };

struct Conflict {
    bool is_edge = false;
    int a1 = -1, a2 = -1;
    // Vertex conflict: both agents at v at t. Edge conflict: a1 moves u -> v
    // and a2 moves v -> u, both arriving at timestep t.
    Vertex v = kNoVertex, u = kNoVertex;
    int t = -1;
    bool operator==(const Conflict&) const = default;
};

std::string to_string(const Conflict& c);

/// All vertex and edge conflicts in the plan, treating finished agents as
/// parked at their targets forever. Ordered by timestep, then agent indices.
std::vector<Conflict> detect_conflicts(const std::vector<Path>& plan);

/// Conflicts involving agent `a` against every other agent (same order).
std::vector<Conflict> detect_conflicts_of(const std::vector<Path>& plan, int a);

bool paths_conflict(const Path& p1, const Path& p2);

/// Classification per MDD singletons. Layers past an agent's MDD depth count
/// as the parked-at-target singleton.
Cardinality classify_conflict(const Conflict& c, const Mdd& mdd1, const Mdd& mdd2);

}  // namespace sympath
