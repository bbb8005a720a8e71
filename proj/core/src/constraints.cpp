#include "sympath/constraints.hpp"

#include <algorithm>
#include <sstream>

namespace sympath {

std::string to_string(const Constraint& c) {
    std::ostringstream out;
    out << "a" << c.agent << ":";
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, VertexConstraint>)
                out << "v(" << b.v << "," << b.t << ")";
            else if constexpr (std::is_same_v<T, EdgeConstraint>)
                out << "e(" << b.from << "->" << b.to << "," << b.t << ")";
            else if constexpr (std::is_same_v<T, BarrierConstraint>) {
                out << "b{";
                for (const auto& n : b.nodes) out << "(" << n.v << "," << n.t << ")";
                out << "}";
            } else if constexpr (std::is_same_v<T, RangeConstraint>) {
                out << "r(" << b.v << ",[" << b.t_min << ",";
                if (b.t_max >= kInfinity)
                    out << "inf";
                else
                    out << b.t_max;
                out << "])";
            } else if constexpr (std::is_same_v<T, LengthLowerConstraint>)
                out << "l>" << b.bound;
            else if constexpr (std::is_same_v<T, LengthUpperConstraint>)
                out << "l<=" << b.bound;
        },
        c.body);
    return out.str();
}

std::string constraint_signature(std::span<const Constraint> constraints, int agent,
                                 const Instance& instance) {
    std::vector<std::string> parts;
    for (const auto& c : constraints) {
        if (c.agent == agent) {
            parts.push_back(to_string(c));
        } else if (const auto* lu = std::get_if<LengthUpperConstraint>(&c.body)) {
            // Other agents' length-upper bounds bar this agent from their target.
            parts.push_back("x(" + std::to_string(instance.agent(c.agent).target) + "," +
                            std::to_string(lu->bound) + ")");
        }
    }
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (auto& p : parts) {
        sig += p;
        sig += ';';
    }
    return sig;
}

ConstraintTable ConstraintTable::build(std::span<const Constraint> constraints, int agent,
                                       const Instance& instance) {
    ConstraintTable table;
    for (const auto& c : constraints) {
        if (c.agent != agent) {
            if (const auto* lu = std::get_if<LengthUpperConstraint>(&c.body))
                table.add_blocked_from(instance.agent(c.agent).target, lu->bound);
            continue;
        }
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, VertexConstraint>)
                    table.add_vertex_ban(b.v, b.t);
                else if constexpr (std::is_same_v<T, EdgeConstraint>)
                    table.add_edge_ban(b.from, b.to, b.t);
                else if constexpr (std::is_same_v<T, BarrierConstraint>) {
                    for (const auto& n : b.nodes) table.add_vertex_ban(n.v, n.t);
                } else if constexpr (std::is_same_v<T, RangeConstraint>) {
                    if (b.t_max >= kInfinity) {
                        table.add_blocked_from(b.v, b.t_min);
                    } else {
                        for (int t = b.t_min; t <= b.t_max; t++) table.add_vertex_ban(b.v, t);
                    }
                } else if constexpr (std::is_same_v<T, LengthLowerConstraint>)
                    table.add_length_window(b.bound + 1, kInfinity);
                else if constexpr (std::is_same_v<T, LengthUpperConstraint>)
                    table.add_length_window(0, b.bound);
            },
            c.body);
    }
    return table;
}

void ConstraintTable::add_vertex_ban(Vertex v, int t) {
    banned_vertices_.insert(vt_key(v, t));
    auto [it, inserted] = last_finite_ban_.emplace(v, t);
    if (!inserted) it->second = std::max(it->second, t);
    max_constrained_t_ = std::max(max_constrained_t_, t);
}

void ConstraintTable::add_edge_ban(Vertex from, Vertex to, int t) {
    banned_edges_[vt_key(to, t)].push_back(from);
    max_constrained_t_ = std::max(max_constrained_t_, t);
}

void ConstraintTable::add_blocked_from(Vertex v, int t) {
    auto [it, inserted] = blocked_from_.emplace(v, t);
    if (!inserted) it->second = std::min(it->second, t);
    max_constrained_t_ = std::max(max_constrained_t_, t);
}

void ConstraintTable::add_length_window(int min_length, int max_length) {
    min_length_ = std::max(min_length_, min_length);
    max_length_ = std::min(max_length_, max_length);
    if (min_length < kInfinity) max_constrained_t_ = std::max(max_constrained_t_, min_length);
    if (max_length < kInfinity) max_constrained_t_ = std::max(max_constrained_t_, max_length);
}

bool ConstraintTable::vertex_allowed(Vertex v, int t) const {
    if (banned_vertices_.count(vt_key(v, t))) return false;
    auto it = blocked_from_.find(v);
    return it == blocked_from_.end() || t < it->second;
}

bool ConstraintTable::edge_allowed(Vertex from, Vertex to, int t) const {
    auto it = banned_edges_.find(vt_key(to, t));
    if (it == banned_edges_.end()) return true;
    return std::find(it->second.begin(), it->second.end(), from) == it->second.end();
}

bool ConstraintTable::can_park(Vertex v, int t) const {
    if (blocked_from_.count(v)) return false;
    auto it = last_finite_ban_.find(v);
    return it == last_finite_ban_.end() || it->second < t;
}

bool ConstraintTable::satisfied_by(const std::vector<Vertex>& path) const {
    if (path.empty()) return false;
    int length = static_cast<int>(path.size()) - 1;
    if (length < min_length_ || length > max_length_) return false;
    for (int t = 0; t <= length; t++) {
        if (!vertex_allowed(path[t], t)) return false;
        if (t > 0 && !edge_allowed(path[t - 1], path[t], t)) return false;
    }
    return can_park(path.back(), length);
}

}  // namespace sympath
