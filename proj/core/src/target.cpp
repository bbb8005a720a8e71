#include "sympath/target.hpp"

#include <cassert>

namespace sympath {

std::optional<TargetFinding> detect_target_conflict(const Conflict& c, ReasoningContext& ctx) {
    if (c.is_edge) return std::nullopt;
    const int len1 = path_length(ctx.path(c.a1));
    const int len2 = path_length(ctx.path(c.a2));
    // Distinct targets: at most one agent can be parked at the conflict vertex.
    assert(!(c.t >= len1 && c.t >= len2));
    int finished, other;
    if (c.t >= len1) {
        finished = c.a1;
        other = c.a2;
    } else if (c.t >= len2) {
        finished = c.a2;
        other = c.a1;
    } else {
        return std::nullopt;
    }
    assert(ctx.instance().agent(finished).target == c.v);

    TargetFinding f;
    f.finished_agent = finished;
    f.other_agent = other;
    f.t = c.t;
    // Never non-cardinal: the length-lower child always costs more.
    f.cardinality = ctx.classify(c) == Cardinality::cardinal ? Cardinality::cardinal
                                                             : Cardinality::semi_cardinal;
    f.set1.push_back({finished, LengthLowerConstraint{c.t}});
    f.set2.push_back({finished, LengthUpperConstraint{c.t}});
    return f;
}

}  // namespace sympath
