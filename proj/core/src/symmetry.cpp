#include "sympath/symmetry.hpp"

#include <cassert>

namespace sympath {

namespace {

ReasoningOutcome standard_split(const Conflict& c, ReasoningContext& ctx) {
    ReasoningOutcome out;
    out.symmetry_class = SymmetryClass::vertex_edge;
    out.cardinality = ctx.classify(c);
    if (!c.is_edge) {
        out.set1.push_back({c.a1, VertexConstraint{c.v, c.t}});
        out.set2.push_back({c.a2, VertexConstraint{c.v, c.t}});
    } else {
        out.set1.push_back({c.a1, EdgeConstraint{c.u, c.v, c.t}});
        out.set2.push_back({c.a2, EdgeConstraint{c.v, c.u, c.t}});
    }
    return out;
}

std::optional<CorridorReasoningMode> corridor_mode_of(CorridorMode mode) {
    switch (mode) {
        case CorridorMode::none: return std::nullopt;
        case CorridorMode::basic: return CorridorReasoningMode::basic;
        case CorridorMode::pseudo: return CorridorReasoningMode::pseudo;
        case CorridorMode::start_target: return CorridorReasoningMode::start_target;
        case CorridorMode::generalized: return CorridorReasoningMode::generalized;
    }
    return std::nullopt;
}

}  // namespace

ReasoningOutcome reason_symmetry(const Conflict& c, ReasoningContext& ctx,
                                 const ReasoningFlags& flags) {
    if (auto mode = corridor_mode_of(flags.corridor)) {
        if (auto finding = corridor_reasoning(c, ctx, *mode)) {
            ReasoningOutcome out;
            out.symmetry_class = SymmetryClass::corridor;
            out.cardinality = finding->cardinality;
            out.set1 = std::move(finding->set1);
            out.set2 = std::move(finding->set2);
            return out;
        }
    }
    if (flags.target) {
        if (auto finding = detect_target_conflict(c, ctx)) {
            ReasoningOutcome out;
            out.symmetry_class = SymmetryClass::target;
            out.cardinality = finding->cardinality;
            out.set1 = std::move(finding->set1);
            out.set2 = std::move(finding->set2);
            return out;
        }
    }
    if (flags.rectangle != RectangleMode::none && !c.is_edge &&
        ctx.classify(c) != Cardinality::cardinal) {
        std::optional<RectangleFinding> finding;
        switch (flags.rectangle) {
            case RectangleMode::entire: finding = detect_rectangle_entire(c, ctx); break;
            case RectangleMode::segments: finding = detect_rectangle_segments(c, ctx); break;
            case RectangleMode::generalized:
                finding = detect_rectangle_generalized(c, ctx);
                break;
            case RectangleMode::none: break;
        }
        if (finding) {
            ReasoningOutcome out;
            out.symmetry_class = SymmetryClass::rectangle;
            out.cardinality = finding->cardinality;
            out.set1 = std::move(finding->set1);
            out.set2 = std::move(finding->set2);
            return out;
        }
    }
    return standard_split(c, ctx);
}

size_t select_conflict(std::span<const ReasoningOutcome> outcomes) {
    assert(!outcomes.empty());
    size_t best = 0;
    auto rank = [](const ReasoningOutcome& o) {
        return std::pair(static_cast<int>(o.cardinality), static_cast<int>(o.symmetry_class));
    };
    for (size_t i = 1; i < outcomes.size(); i++) {
        if (rank(outcomes[i]) > rank(outcomes[best])) best = i;
    }
    return best;
}

}  // namespace sympath
