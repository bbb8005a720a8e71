#pragma once

#include "sympath/conflict.hpp"
#include "sympath/low_level.hpp"

namespace sympath {

/// Node-local view handed to the symmetry reasoning modules: the accumulated
/// constraints, the current plan, and lazily built per-agent constraint
/// tables and MDDs.
class ReasoningContext {
public:
    ReasoningContext(const Instance& instance, std::span<const Constraint> constraints,
                     const std::vector<Path>& plan, MddCache* mdd_cache = nullptr);

    const Instance& instance() const { return instance_; }
    std::span<const Constraint> constraints() const { return constraints_; }
    const std::vector<Path>& plan() const { return plan_; }
    const Path& path(int agent) const { return plan_[agent]; }

    const ConstraintTable& table(int agent);
    /// MDD for the agent's current path length under the node constraints.
    const Mdd& mdd(int agent);

    /// Earliest timestep the agent can occupy x under the node constraints;
    /// `excluded` forbids traversing the given edges/vertices.
    int earliest_arrival(int agent, Vertex x, const TravelExclusions* excluded = nullptr);

    Cardinality classify(const Conflict& c);

private:
    const Instance& instance_;
    std::span<const Constraint> constraints_;
    const std::vector<Path>& plan_;
    MddCache* mdd_cache_;
    std::vector<std::unique_ptr<ConstraintTable>> tables_;
    std::vector<std::shared_ptr<const Mdd>> mdds_;
};

/// Two mutually disjunctive constraint sets produced for one conflict, plus
/// how the split was derived and how it is prioritized.
struct ReasoningOutcome {
    SymmetryClass symmetry_class = SymmetryClass::vertex_edge;
    Cardinality cardinality = Cardinality::non_cardinal;
    std::vector<Constraint> set1, set2;
};

}  // namespace sympath
