#include "sympath/conflict.hpp"

#include <algorithm>
#include <sstream>

namespace sympath {

std::string to_string(const Conflict& c) {
    std::ostringstream out;
    if (c.is_edge)
        out << "<a" << c.a1 << ",a" << c.a2 << "," << c.u << "->" << c.v << "," << c.t << ">";
    else
        out << "<a" << c.a1 << ",a" << c.a2 << "," << c.v << "," << c.t << ">";
    return out.str();
}

namespace {

void find_pair_conflicts(const std::vector<Path>& plan, int a1, int a2,
                         std::vector<Conflict>& out) {
    const Path& p1 = plan[a1];
    const Path& p2 = plan[a2];
    const int max_t = std::max(path_length(p1), path_length(p2));
    for (int t = 0; t <= max_t; t++) {
        Vertex v1 = position_at(p1, t);
        Vertex v2 = position_at(p2, t);
        if (v1 == v2) {
            out.push_back({false, a1, a2, v1, kNoVertex, t});
        } else if (t > 0 && v1 == position_at(p2, t - 1) && v2 == position_at(p1, t - 1)) {
            // Swap. Only a real edge conflict if both actually moved.
            if (position_at(p1, t - 1) != v1 && position_at(p2, t - 1) != v2)
                out.push_back({true, a1, a2, v1, v2, t});
        }
    }
}

}  // namespace

std::vector<Conflict> detect_conflicts(const std::vector<Path>& plan) {
    std::vector<Conflict> out;
    const int m = static_cast<int>(plan.size());
    for (int a1 = 0; a1 < m; a1++)
        for (int a2 = a1 + 1; a2 < m; a2++) find_pair_conflicts(plan, a1, a2, out);
    std::stable_sort(out.begin(), out.end(), [](const Conflict& a, const Conflict& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.a1 != b.a1) return a.a1 < b.a1;
        return a.a2 < b.a2;
    });
    return out;
}

std::vector<Conflict> detect_conflicts_of(const std::vector<Path>& plan, int a) {
    std::vector<Conflict> out;
    for (int other = 0; other < static_cast<int>(plan.size()); other++) {
        if (other == a) continue;
        find_pair_conflicts(plan, std::min(a, other), std::max(a, other), out);
    }
    return out;
}

bool paths_conflict(const Path& p1, const Path& p2) {
    const int max_t = std::max(path_length(p1), path_length(p2));
    for (int t = 0; t <= max_t; t++) {
        Vertex v1 = position_at(p1, t);
        Vertex v2 = position_at(p2, t);
        if (v1 == v2) return true;
        if (t > 0 && v1 == position_at(p2, t - 1) && v2 == position_at(p1, t - 1) &&
            position_at(p1, t - 1) != v1)
            return true;
    }
    return false;
}

namespace {

// Layer of the MDD at timestep t, with the parked-at-target extension.
bool layer_is_singleton_at(const Mdd& mdd, int t, Vertex v) {
    if (t > mdd.cost()) {
        auto last = mdd.layer(mdd.cost());
        return last.size() == 1 && last[0] == v;
    }
    auto layer = mdd.layer(t);
    return layer.size() == 1 && layer[0] == v;
}

}  // namespace

Cardinality classify_conflict(const Conflict& c, const Mdd& mdd1, const Mdd& mdd2) {
    bool side1, side2;
    if (!c.is_edge) {
        side1 = layer_is_singleton_at(mdd1, c.t, c.v);
        side2 = layer_is_singleton_at(mdd2, c.t, c.v);
    } else {
        side1 = layer_is_singleton_at(mdd1, c.t - 1, c.u) && layer_is_singleton_at(mdd1, c.t, c.v);
        side2 = layer_is_singleton_at(mdd2, c.t - 1, c.v) && layer_is_singleton_at(mdd2, c.t, c.u);
    }
    if (side1 && side2) return Cardinality::cardinal;
    if (side1 || side2) return Cardinality::semi_cardinal;
    return Cardinality::non_cardinal;
}

}  // namespace sympath
