#include "sympath/oracle.hpp"

#include <algorithm>
#include <queue>

#include "sympath/low_level.hpp"

namespace sympath {
namespace oracle {

namespace {

struct JointNode {
    std::vector<Vertex> pos;
    std::vector<int> cost;  // per-agent path length so far (trailing target waits free)
    int parent = -1;
};

struct JointKey {
    std::vector<Vertex> pos;
    std::vector<int> cost;
    bool operator==(const JointKey&) const = default;
};

struct JointKeyHash {
    size_t operator()(const JointKey& k) const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](int x) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (Vertex v : k.pos) mix(v);
        for (int c : k.cost) mix(c);
        return h;
    }
};

}  // namespace

JointResult joint_state_astar(const Instance& instance, int horizon) {
    const int m = instance.num_agents();
    if (horizon < 0) horizon = m * (instance.map().num_unblocked() + m);

    std::vector<const std::vector<int>*> dist(m);
    for (int i = 0; i < m; i++) dist[i] = &instance.distances_from(instance.agent(i).target);

    auto h_of = [&](const std::vector<Vertex>& pos) {
        int h = 0;
        for (int i = 0; i < m; i++) h += (*dist[i])[pos[i]];
        return h;
    };
    auto time_of = [&](const JointNode& n) {
        int t = 0;
        for (int i = 0; i < m; i++)
            t = std::max(t, n.cost[i]);
        return t;
    };

    std::vector<JointNode> nodes;
    std::unordered_set<JointKey, JointKeyHash> seen;
    struct Entry {
        int f, g;
        uint32_t seq;
        int node;
        bool operator>(const Entry& o) const {
            if (f != o.f) return f > o.f;
            if (g != o.g) return g < o.g;  // prefer deeper
            return seq > o.seq;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
    uint32_t seq = 0;

    JointNode root;
    root.pos.resize(m);
    root.cost.assign(m, 0);
    for (int i = 0; i < m; i++) root.pos[i] = instance.agent(i).start;
    {
        // Start positions are pairwise distinct by instance invariant.
        int g0 = 0;
        nodes.push_back(root);
        seen.insert({root.pos, root.cost});
        open.push({g0 + h_of(root.pos), g0, seq++, 0});
    }

    JointResult result;
    std::vector<int> order(m);
    for (int i = 0; i < m; i++) order[i] = i;

    while (!open.empty()) {
        Entry entry = open.top();
        open.pop();
        const JointNode cur = nodes[entry.node];

        bool all_home = true;
        for (int i = 0; i < m && all_home; i++)
            all_home = cur.pos[i] == instance.agent(i).target;
        if (all_home) {
            result.solved = true;
            result.soc = entry.g;
            // Reconstruct one solution.
            std::vector<std::vector<Vertex>> rev(m);
            int idx = entry.node;
            while (idx >= 0) {
                for (int i = 0; i < m; i++) rev[i].push_back(nodes[idx].pos[i]);
                idx = nodes[idx].parent;
            }
            result.paths.resize(m);
            for (int i = 0; i < m; i++) {
                std::reverse(rev[i].begin(), rev[i].end());
                // Trim the stay-at-target tail.
                while (rev[i].size() > 1 && rev[i].back() == instance.agent(i).target &&
                       rev[i][rev[i].size() - 2] == instance.agent(i).target)
                    rev[i].pop_back();
                result.paths[i] = std::move(rev[i]);
            }
            return result;
        }

        const int t = time_of(cur);
        if (t >= horizon) continue;

        // Enumerate joint moves agent by agent, rejecting vertex and swap
        // collisions against already-placed agents.
        std::vector<Vertex> next(m, kNoVertex);
        auto recurse = [&](auto&& self, int i) -> void {
            if (i == m) {
                JointNode child;
                child.pos = next;
                child.cost.resize(m);
                int g = 0;
                for (int a = 0; a < m; a++) {
                    const Vertex tgt = instance.agent(a).target;
                    if (next[a] != tgt)
                        child.cost[a] = t + 1;
                    else if (next[a] != cur.pos[a])
                        child.cost[a] = t + 1;  // moved onto the target
                    else
                        child.cost[a] = cur.cost[a];
                    g += child.cost[a];
                }
                JointKey key{child.pos, child.cost};
                if (!seen.insert(key).second) return;
                child.parent = entry.node;
                nodes.push_back(child);
                open.push({g + h_of(child.pos), g, seq++, static_cast<int>(nodes.size()) - 1});
            } else {
                auto try_to = [&](Vertex to) {
                    for (int j = 0; j < i; j++) {
                        if (next[j] == to) return;                                  // vertex
                        if (next[j] == cur.pos[i] && to == cur.pos[j]) return;      // swap
                    }
                    next[i] = to;
                    self(self, i + 1);
                };
                try_to(cur.pos[i]);
                auto [nbr, n] = instance.map().neighbors(cur.pos[i]);
                for (int k = 0; k < n; k++) try_to(nbr[k]);
            }
        };
        recurse(recurse, 0);
    }
    result.infeasible = true;
    return result;
}

namespace {

void enumerate_rec(const Instance& instance, Vertex target, const std::vector<int>& dist,
                   const ConstraintTable* table, Path& prefix, int max_length, size_t budget,
                   std::vector<Path>& out, bool& overflow) {
    if (overflow) return;
    const Vertex v = prefix.back();
    const int t = path_length(prefix);
    // A path ends at the target via a move (or has length 0); a trailing wait
    // at the target would be the same path with junk appended.
    if (v == target && (t == 0 || prefix[t - 1] != target)) {
        if (table == nullptr ||
            (t >= table->min_length() && t <= table->max_length() && table->can_park(v, t))) {
            if (out.size() >= budget) {
                overflow = true;
                return;
            }
            out.push_back(prefix);
        }
    }
    if (t >= max_length) return;
    auto step = [&](Vertex w) {
        if (dist[w] >= kInfinity || dist[w] > max_length - (t + 1)) return;
        if (table != nullptr) {
            if (!table->vertex_allowed(w, t + 1)) return;
            if (w != v && !table->edge_allowed(v, w, t + 1)) return;
        }
        prefix.push_back(w);
        enumerate_rec(instance, target, dist, table, prefix, max_length, budget, out, overflow);
        prefix.pop_back();
    };
    auto [nbr, n] = instance.map().neighbors(v);
    for (int i = 0; i < n; i++) step(nbr[i]);
    step(v);
}

}  // namespace

std::optional<std::vector<Path>> enumerate_paths(const Instance& instance, int agent,
                                                 int max_length, size_t budget,
                                                 const ConstraintTable* table) {
    const Vertex start = instance.agent(agent).start;
    const Vertex target = instance.agent(agent).target;
    const auto& dist = instance.distances_from(target);
    std::vector<Path> out;
    if (table != nullptr && (table->infeasible() || !table->vertex_allowed(start, 0))) return out;
    Path prefix{start};
    bool overflow = false;
    enumerate_rec(instance, target, dist, table, prefix, max_length, budget, out, overflow);
    if (overflow) return std::nullopt;
    return out;
}

namespace {

bool pair_satisfies(const Instance& instance, int a1, int a2, const Path& p1, const Path& p2,
                    std::span<const Constraint> set) {
    for (const auto& c : set) {
        if (violates(c, a1, p1, instance)) return false;
        if (violates(c, a2, p2, instance)) return false;
    }
    return true;
}

}  // namespace

DisjunctiveReport verify_mutually_disjunctive(const Instance& instance, int a1, int a2,
                                              std::span<const Constraint> set1,
                                              std::span<const Constraint> set2,
                                              std::span<const Constraint> base, int slack,
                                              size_t path_budget, size_t pair_budget) {
    DisjunctiveReport report;
    auto table1 = ConstraintTable::build(base, a1, instance);
    auto table2 = ConstraintTable::build(base, a2, instance);
    SpaceTimeAStar astar1(instance, a1);
    SpaceTimeAStar astar2(instance, a2);
    auto shortest1 = astar1.plan(table1, ConflictAvoidanceTable{});
    auto shortest2 = astar2.plan(table2, ConflictAvoidanceTable{});
    if (!shortest1 || !shortest2) {
        // One side admits no path at all: no conflict-free pair can violate
        // both sets, vacuously disjunctive.
        report.verdict = Verdict::disjunctive;
        return report;
    }
    auto paths1 =
        enumerate_paths(instance, a1, path_length(*shortest1) + slack, path_budget, &table1);
    auto paths2 =
        enumerate_paths(instance, a2, path_length(*shortest2) + slack, path_budget, &table2);
    if (!paths1 || !paths2) return report;
    if (paths1->size() * paths2->size() > pair_budget) return report;

    for (const Path& p1 : *paths1) {
        for (const Path& p2 : *paths2) {
            report.pairs_checked++;
            // Both paths already satisfy base individually; the cross-agent
            // side of base (length-upper prohibitions) still needs a check.
            if (!pair_satisfies(instance, a1, a2, p1, p2, base)) continue;
            if (pair_satisfies(instance, a1, a2, p1, p2, set1)) continue;
            if (pair_satisfies(instance, a1, a2, p1, p2, set2)) continue;
            if (paths_conflict(p1, p2)) continue;
            report.verdict = Verdict::counterexample;
            report.path1 = p1;
            report.path2 = p2;
            return report;
        }
    }
    report.verdict = Verdict::disjunctive;
    return report;
}

}  // namespace oracle
}  // namespace sympath
