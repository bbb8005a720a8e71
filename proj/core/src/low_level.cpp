#include "sympath/low_level.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace sympath {

ConflictAvoidanceTable::ConflictAvoidanceTable(const std::vector<Path>& paths, int skip_agent) {
    for (int i = 0; i < static_cast<int>(paths.size()); i++) {
        if (i == skip_agent || paths[i].empty()) continue;
        const Path& p = paths[i];
        const int len = path_length(p);
        horizon_ = std::max(horizon_, len);
        for (int t = 0; t <= len; t++) {
            vertex_count_[vt_key(p[t], t)]++;
            if (t > 0 && p[t] != p[t - 1]) edges_at_[vt_key(p[t], t)].push_back({p[t - 1], p[t]});
        }
        auto [it, inserted] = parked_.emplace(p.back(), std::pair<int, int>{len + 1, 1});
        if (!inserted) {
            it->second.first = std::min(it->second.first, len + 1);
            it->second.second++;
        }
    }
}

int ConflictAvoidanceTable::step_conflicts(Vertex from, Vertex to, int t) const {
    int hits = 0;
    if (auto it = vertex_count_.find(vt_key(to, t)); it != vertex_count_.end())
        hits += it->second;
    if (auto it = parked_.find(to); it != parked_.end() && t >= it->second.first)
        hits += it->second.second;
    if (from != to) {
        // Swap: someone else moved to -> from at the same timestep.
        if (auto it = edges_at_.find(vt_key(from, t)); it != edges_at_.end()) {
            for (const auto& [u, w] : it->second)
                if (u == to) hits++;
        }
    }
    return hits;
}

bool TravelExclusions::edge_excluded(Vertex a, Vertex b) const {
    for (const auto& [u, w] : edges)
        if ((u == a && w == b) || (u == b && w == a)) return true;
    return false;
}

bool TravelExclusions::vertex_excluded(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

SpaceTimeAStar::SpaceTimeAStar(const Instance& instance, int agent)
    : instance_(instance),
      agent_(agent),
      start_(instance.agent(agent).start),
      target_(instance.agent(agent).target) {}

namespace {

struct Node {
    Vertex v;
    int t;
    bool goal_wait;  // arrived at the target vertex by waiting there
    int conflicts;
    int parent;
};

struct QueueEntry {
    int f;
    int conflicts;
    uint32_t seq;
    int node;
    bool operator>(const QueueEntry& o) const {
        if (f != o.f) return f > o.f;
        if (conflicts != o.conflicts) return conflicts > o.conflicts;
        return seq > o.seq;
    }
};

uint64_t state_key(Vertex v, int t, bool goal_wait) {
    return (static_cast<uint64_t>(v) << 33) | (static_cast<uint64_t>(t) << 1) |
           (goal_wait ? 1 : 0);
}

}  // namespace

std::optional<Path> SpaceTimeAStar::plan(const ConstraintTable& table,
                                         const ConflictAvoidanceTable& cat) {
    if (table.infeasible()) return std::nullopt;
    if (!table.vertex_allowed(start_, 0)) return std::nullopt;

    const auto& dist = instance_.distances_from(target_);
    if (dist[start_] >= kInfinity) return std::nullopt;
    const int horizon = instance_.map().num_unblocked() + table.max_constrained_timestep() + 1;

    std::vector<Node> nodes;
    std::unordered_map<uint64_t, int> best_conflicts;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> open;
    uint32_t seq = 0;

    nodes.push_back({start_, 0, false, 0, -1});
    best_conflicts[state_key(start_, 0, false)] = 0;
    open.push({dist[start_], 0, seq++, 0});

    while (!open.empty()) {
        const QueueEntry entry = open.top();
        open.pop();
        const Node cur = nodes[entry.node];
        auto it = best_conflicts.find(state_key(cur.v, cur.t, cur.goal_wait));
        if (it != best_conflicts.end() && it->second < cur.conflicts) continue;  // stale

        if (cur.v == target_ && !cur.goal_wait && cur.t >= table.min_length() &&
            cur.t <= table.max_length() && table.can_park(target_, cur.t)) {
            Path path(cur.t + 1);
            int idx = entry.node;
            for (int t = cur.t; t >= 0; t--) {
                path[t] = nodes[idx].v;
                idx = nodes[idx].parent;
            }
            return path;
        }

        if (cur.t >= horizon) continue;
        const int nt = cur.t + 1;
        auto try_step = [&](Vertex to) {
            if (!table.vertex_allowed(to, nt)) return;
            if (to != cur.v && !table.edge_allowed(cur.v, to, nt)) return;
            const int h = dist[to];
            if (h >= kInfinity) return;
            if (nt + h > table.max_length()) return;
            const bool goal_wait = (to == target_ && to == cur.v);
            const int conflicts = cur.conflicts + cat.step_conflicts(cur.v, to, nt);
            const uint64_t key = state_key(to, nt, goal_wait);
            auto [bit, inserted] = best_conflicts.emplace(key, conflicts);
            if (!inserted && bit->second <= conflicts) return;
            bit->second = conflicts;
            nodes.push_back({to, nt, goal_wait, conflicts, entry.node});
            open.push({nt + h, conflicts, seq++, static_cast<int>(nodes.size()) - 1});
        };
        auto [nbr, n] = instance_.map().neighbors(cur.v);
        for (int i = 0; i < n; i++) try_step(nbr[i]);
        try_step(cur.v);
    }
    return std::nullopt;
}

int SpaceTimeAStar::earliest_arrival(Vertex x, const ConstraintTable& table,
                                     const TravelExclusions* excluded) {
    if (!instance_.map().passable(x)) return kInfinity;
    if (excluded != nullptr && excluded->vertex_excluded(x)) return kInfinity;
    if (!table.vertex_allowed(start_, 0)) return kInfinity;
    if (excluded != nullptr && excluded->vertex_excluded(start_)) return kInfinity;
    if (start_ == x) return 0;

    const auto& dist = instance_.distances_from(x);
    if (dist[start_] >= kInfinity) return kInfinity;
    const int horizon = instance_.map().num_unblocked() + table.max_constrained_timestep() + 1;

    struct Entry {
        int f;
        int t;
        Vertex v;
        bool operator>(const Entry& o) const {
            if (f != o.f) return f > o.f;
            return t > o.t;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
    std::unordered_set<uint64_t> seen;
    auto key = [](Vertex v, int t) { return (static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(t); };
    open.push({dist[start_], 0, start_});
    seen.insert(key(start_, 0));

    while (!open.empty()) {
        const Entry cur = open.top();
        open.pop();
        if (cur.v == x) return cur.t;
        if (cur.t >= horizon) continue;
        const int nt = cur.t + 1;
        auto try_step = [&](Vertex to) {
            if (!table.vertex_allowed(to, nt)) return;
            if (to != cur.v && !table.edge_allowed(cur.v, to, nt)) return;
            if (excluded != nullptr) {
                if (excluded->vertex_excluded(to)) return;
                if (to != cur.v && excluded->edge_excluded(cur.v, to)) return;
            }
            if (dist[to] >= kInfinity) return;
            if (!seen.insert(key(to, nt)).second) return;
            open.push({nt + dist[to], nt, to});
        };
        auto [nbr, n] = instance_.map().neighbors(cur.v);
        for (int i = 0; i < n; i++) try_step(nbr[i]);
        try_step(cur.v);
    }
    return kInfinity;
}

}  // namespace sympath
