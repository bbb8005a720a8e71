#pragma once

#include <optional>

#include "sympath/reasoning_context.hpp"

namespace sympath {

/// Chain of degree-2 vertices plus the two endpoints where the chain stops.
struct Corridor {
    std::vector<Vertex> chain;  // endpoint, interior..., endpoint (in order)
    int length() const { return static_cast<int>(chain.size()) - 1; }
    bool contains(Vertex v) const;
    int position_of(Vertex v) const;  // -1 if absent
};

enum class CorridorChainMode {
    basic,        // stop at non-degree-2 vertices or either agent's start/target
    generalized,  // stop only at non-degree-2 vertices
};

/// Corridor around the conflicting vertex/edge, or nullopt when the conflict
/// location has no degree-2 seed at all (vertex conflicts in open space).
/// An edge conflict between two non-corridor cells yields the length-1 chain
/// [u, v] so pseudo-corridor screening can run.
std::optional<Corridor> find_corridor(const Conflict& c, const Instance& instance,
                                      CorridorChainMode mode);

/// Whether the two agents have to pass each other inside the corridor:
/// entrances differ, exits differ, and the entrance-to-entrance direction
/// opposes the exit-to-exit direction along the chain.
bool must_cross(const Conflict& c, const Corridor& corridor, ReasoningContext& ctx);

enum class CorridorFlavor { basic, pseudo, corridor_target_one, corridor_target_two };

struct CorridorFinding {
    CorridorFlavor flavor;
    Cardinality cardinality = Cardinality::non_cardinal;
    std::vector<Constraint> set1, set2;
};

enum class CorridorReasoningMode {
    basic,         // C
    pseudo,        // PC: basic plus pseudo-corridor screening
    start_target,  // STC: generalized chains, corridor-target splits, no pseudo
    generalized,   // GC: everything
};

std::optional<CorridorFinding> corridor_reasoning(const Conflict& c, ReasoningContext& ctx,
                                                  CorridorReasoningMode mode);

/// Length-1 corridor handling: both agents squeeze through one edge and every
/// single-wait detour still collides. Emitted findings are always cardinal.
std::optional<CorridorFinding> pseudo_corridor_reasoning(const Conflict& c,
                                                         ReasoningContext& ctx);

}  // namespace sympath
