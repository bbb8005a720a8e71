#include "sympath/reasoning_context.hpp"

namespace sympath {

ReasoningContext::ReasoningContext(const Instance& instance,
                                   std::span<const Constraint> constraints,
                                   const std::vector<Path>& plan, MddCache* mdd_cache)
    : instance_(instance),
      constraints_(constraints),
      plan_(plan),
      mdd_cache_(mdd_cache),
      tables_(plan.size()),
      mdds_(plan.size()) {}

const ConstraintTable& ReasoningContext::table(int agent) {
    if (!tables_[agent]) {
        tables_[agent] = std::make_unique<ConstraintTable>(
            ConstraintTable::build(constraints_, agent, instance_));
    }
    return *tables_[agent];
}

const Mdd& ReasoningContext::mdd(int agent) {
    if (!mdds_[agent]) {
        const int cost = path_length(plan_[agent]);
        if (mdd_cache_ != nullptr) {
            mdds_[agent] = mdd_cache_->get(instance_, agent, constraints_, table(agent), cost);
        } else {
            mdds_[agent] =
                std::make_shared<const Mdd>(Mdd::build(instance_, agent, table(agent), cost));
        }
    }
    return *mdds_[agent];
}

int ReasoningContext::earliest_arrival(int agent, Vertex x, const TravelExclusions* excluded) {
    SpaceTimeAStar astar(instance_, agent);
    return astar.earliest_arrival(x, table(agent), excluded);
}

Cardinality ReasoningContext::classify(const Conflict& c) {
    return classify_conflict(c, mdd(c.a1), mdd(c.a2));
}

}  // namespace sympath
