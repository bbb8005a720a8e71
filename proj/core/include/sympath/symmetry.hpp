#pragma once

#include "sympath/corridor.hpp"
#include "sympath/rectangle.hpp"
#include "sympath/target.hpp"

namespace sympath {

enum class RectangleMode { none, entire, segments, generalized };
enum class CorridorMode { none, basic, pseudo, start_target, generalized };
enum class HeuristicMode { none, cg, wdg };

struct ReasoningFlags {
    RectangleMode rectangle = RectangleMode::none;
    bool target = false;
    CorridorMode corridor = CorridorMode::none;
};

/// Symmetry dispatch for one conflict: corridor reasoning first, then target,
/// then rectangle (semi-/non-cardinal vertex conflicts only), falling back to
/// the standard single vertex/edge constraint split.
ReasoningOutcome reason_symmetry(const Conflict& c, ReasoningContext& ctx,
                                 const ReasoningFlags& flags);

/// Index of the conflict to resolve: highest cardinality first, then class
/// priority (target > corridor > rectangle > vertex/edge), then detection
/// order. Outcomes run parallel to conflicts.
size_t select_conflict(std::span<const ReasoningOutcome> outcomes);

}  // namespace sympath
