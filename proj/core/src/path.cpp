#include "sympath/path.hpp"

namespace sympath {

namespace {

bool visits_at_or_after(const Path& p, Vertex v, int from_t) {
    if (p.back() == v) return true;
    for (int t = from_t; t <= path_length(p); t++)
        if (position_at(p, t) == v) return true;
    return false;
}

}  // namespace

bool violates(const Constraint& c, int agent, const Path& path, const Instance& instance) {
    const int len = path_length(path);
    if (c.agent != agent) {
        if (const auto* lu = std::get_if<LengthUpperConstraint>(&c.body))
            return visits_at_or_after(path, instance.agent(c.agent).target, lu->bound);
        return false;
    }
    return std::visit(
        [&](const auto& b) -> bool {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, VertexConstraint>) {
                return position_at(path, b.t) == b.v;
            } else if constexpr (std::is_same_v<T, EdgeConstraint>) {
                return b.t >= 1 && b.t <= len && path[b.t - 1] == b.from && path[b.t] == b.to;
            } else if constexpr (std::is_same_v<T, BarrierConstraint>) {
                for (const auto& n : b.nodes)
                    if (position_at(path, n.t) == n.v) return true;
                return false;
            } else if constexpr (std::is_same_v<T, RangeConstraint>) {
                if (b.t_max >= len && path.back() == b.v) return true;
                for (int t = b.t_min; t <= std::min(b.t_max, len); t++)
                    if (path[t] == b.v) return true;
                return false;
            } else if constexpr (std::is_same_v<T, LengthLowerConstraint>) {
                return len <= b.bound;
            } else {
                static_assert(std::is_same_v<T, LengthUpperConstraint>);
                return len > b.bound;
            }
        },
        c.body);
}

std::vector<int> violating_agents(std::span<const Constraint> added,
                                  const std::vector<Path>& plan, const Instance& instance) {
    std::vector<int> agents;
    for (int i = 0; i < static_cast<int>(plan.size()); i++) {
        for (const auto& c : added) {
            if (violates(c, i, plan[i], instance)) {
                agents.push_back(i);
                break;
            }
        }
    }
    return agents;
}

}  // namespace sympath
