#include "sympath/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <queue>

#include "sympath/heuristics.hpp"

namespace sympath {

SolverConfig SolverConfig::from_name(const std::string& name) {
    SolverConfig c;
    c.name = name;
    c.heuristic = HeuristicMode::cg;
    if (name == "none") {
    } else if (name == "r") {
        c.flags.rectangle = RectangleMode::entire;
    } else if (name == "rm") {
        c.flags.rectangle = RectangleMode::segments;
    } else if (name == "gr") {
        c.flags.rectangle = RectangleMode::generalized;
    } else if (name == "t") {
        c.flags.target = true;
    } else if (name == "c") {
        c.flags.corridor = CorridorMode::basic;
    } else if (name == "pc") {
        c.flags.corridor = CorridorMode::pseudo;
    } else if (name == "stc") {
        c.flags.corridor = CorridorMode::start_target;
    } else if (name == "gc") {
        c.flags.corridor = CorridorMode::generalized;
    } else if (name == "rtc") {
        c.flags.rectangle = RectangleMode::generalized;
        c.flags.target = true;
        c.flags.corridor = CorridorMode::generalized;
    } else if (name == "cbsh2") {
        c.heuristic = HeuristicMode::wdg;
    } else if (name == "cbsh2-rtc") {
        c.heuristic = HeuristicMode::wdg;
        c.flags.rectangle = RectangleMode::generalized;
        c.flags.target = true;
        c.flags.corridor = CorridorMode::generalized;
    } else {
        throw std::invalid_argument("unknown solver config `" + name + "`");
    }
    return c;
}

const std::vector<std::string>& SolverConfig::known_names() {
    static const std::vector<std::string> names = {
        "none", "r", "rm", "gr", "t", "c", "pc", "stc", "gc", "rtc", "cbsh2", "cbsh2-rtc"};
    return names;
}

struct CbsSolver::CtNode {
    int parent = -1;
    std::vector<Constraint> added;
    std::vector<std::pair<int, Path>> replanned;
    int cost = 0;
    int h = 0;
    bool h_computed = false;
    int conflict_count = 0;
    int depth = 0;
};

CbsSolver::CbsSolver(const Instance& instance, SolverConfig config)
    : instance_(instance), config_(std::move(config)) {}

std::vector<Path> CbsSolver::materialize_plan(const std::vector<CtNode>& arena, int node) const {
    std::vector<Path> plan(instance_.num_agents());
    std::vector<bool> have(instance_.num_agents(), false);
    int remaining = instance_.num_agents();
    for (int at = node; at >= 0 && remaining > 0; at = arena[at].parent) {
        for (const auto& [agent, path] : arena[at].replanned) {
            if (!have[agent]) {
                plan[agent] = path;
                have[agent] = true;
                remaining--;
            }
        }
    }
    assert(remaining == 0);
    return plan;
}

std::vector<Constraint> CbsSolver::materialize_constraints(const std::vector<CtNode>& arena,
                                                           int node) const {
    std::vector<Constraint> out;
    for (int at = node; at >= 0; at = arena[at].parent)
        out.insert(out.end(), arena[at].added.begin(), arena[at].added.end());
    return out;
}

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Conflicts with at least one endpoint in `agents`, each counted once.
int conflicts_touching(const std::vector<Path>& plan, const std::vector<int>& agents) {
    std::vector<char> in_set(plan.size(), 0);
    for (int a : agents) in_set[a] = 1;
    int count = 0;
    for (int a : agents) {
        for (int other = 0; other < static_cast<int>(plan.size()); other++) {
            if (other == a || (in_set[other] && other < a)) continue;
            const int max_t = std::max(path_length(plan[a]), path_length(plan[other]));
            for (int t = 0; t <= max_t; t++) {
                Vertex v1 = position_at(plan[a], t);
                Vertex v2 = position_at(plan[other], t);
                if (v1 == v2) {
                    count++;
                } else if (t > 0 && v1 == position_at(plan[other], t - 1) &&
                           v2 == position_at(plan[a], t - 1) &&
                           position_at(plan[a], t - 1) != v1) {
                    count++;
                }
            }
        }
    }
    return count;
}

}  // namespace

int CbsSolver::wdg_edge_weight(int a1, int a2, const std::vector<Constraint>& constraints,
                               const std::vector<Path>& plan, double deadline,
                               bool& infeasible) {
    std::string key = std::to_string(a1) + "," + std::to_string(a2) + "|" +
                      constraint_signature(constraints, a1, instance_) + "|" +
                      constraint_signature(constraints, a2, instance_);
    if (auto it = wdg_memo_.find(key); it != wdg_memo_.end()) {
        if (it->second < 0) {
            infeasible = true;
            return 0;
        }
        return it->second;
    }

    // Two-agent sub-instance under the pair's binding constraints. Length
    // bounds of absent agents become permanent target prohibitions.
    Instance sub(instance_.map(), {instance_.agent(a1), instance_.agent(a2)});
    std::vector<Constraint> sub_constraints;
    for (const auto& c : constraints) {
        if (c.agent == a1 || c.agent == a2) {
            Constraint copy = c;
            copy.agent = c.agent == a1 ? 0 : 1;
            sub_constraints.push_back(std::move(copy));
        } else if (const auto* lu = std::get_if<LengthUpperConstraint>(&c.body)) {
            const Vertex g = instance_.agent(c.agent).target;
            sub_constraints.push_back({0, RangeConstraint{g, lu->bound, kInfinity}});
            sub_constraints.push_back({1, RangeConstraint{g, lu->bound, kInfinity}});
        }
    }

    SolverConfig sub_config = config_;
    sub_config.heuristic = HeuristicMode::cg;  // no recursive pair solves
    sub_config.node_limit = 4000;
    sub_config.time_limit_seconds = std::max(0.0, deadline - now_seconds());
    CbsSolver pair_solver(sub, sub_config);
    SolveResult result = pair_solver.solve(sub_constraints);

    if (result.stats.status == SolveStatus::infeasible) {
        wdg_memo_[key] = -1;
        infeasible = true;
        return 0;
    }
    if (!result.stats.solved) return -1;  // bounded-out; caller falls back
    const int current = path_length(plan[a1]) + path_length(plan[a2]);
    const int weight = std::max(0, result.stats.soc - current);
    wdg_memo_[key] = weight;
    return weight;
}

int CbsSolver::compute_heuristic(const std::vector<Constraint>& constraints,
                                 const std::vector<Path>& plan,
                                 const std::vector<Conflict>& conflicts, ReasoningContext& ctx,
                                 double deadline) {
    if (config_.heuristic == HeuristicMode::none) return 0;

    // Conflicting pairs and whether each pair has a cardinal conflict.
    std::map<std::pair<int, int>, bool> pairs;
    for (const auto& c : conflicts) {
        bool& cardinal = pairs[{c.a1, c.a2}];
        if (!cardinal && ctx.classify(c) == Cardinality::cardinal) cardinal = true;
    }
    if (pairs.empty()) return 0;

    std::vector<int> agents;
    for (const auto& [pair, cardinal] : pairs) {
        agents.push_back(pair.first);
        agents.push_back(pair.second);
    }
    std::sort(agents.begin(), agents.end());
    agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
    auto id_of = [&](int a) {
        return static_cast<int>(std::lower_bound(agents.begin(), agents.end(), a) -
                                agents.begin());
    };

    if (config_.heuristic == HeuristicMode::cg) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& [pair, cardinal] : pairs)
            if (cardinal) edges.push_back({id_of(pair.first), id_of(pair.second)});
        return min_vertex_cover(static_cast<int>(agents.size()), edges);
    }

    // WDG: pairwise optimal-cost deltas, edge-weighted MVC on top.
    std::vector<std::tuple<int, int, int>> edges;
    for (const auto& [pair, cardinal] : pairs) {
        bool infeasible = false;
        int w = wdg_edge_weight(pair.first, pair.second, constraints, plan, deadline,
                                infeasible);
        if (infeasible) return kInfinity;
        if (w < 0) w = cardinal ? 1 : 0;  // sub-solve bounded out
        if (w > 0) edges.push_back({id_of(pair.first), id_of(pair.second), w});
    }
    return edge_weighted_mvc(static_cast<int>(agents.size()), edges);
}

SolveResult CbsSolver::solve() { return solve({}); }

SolveResult CbsSolver::solve(std::vector<Constraint> root_constraints) {
    const double start = now_seconds();
    const double deadline = start + config_.time_limit_seconds;
    SolveResult result;
    SolveStats& stats = result.stats;

    std::vector<CtNode> arena;
    arena.emplace_back();
    CtNode& root = arena.back();
    root.added = std::move(root_constraints);

    // Root plan: agents planned in index order, each against the already
    // planned paths.
    {
        std::vector<Path> plan(instance_.num_agents());
        for (int a = 0; a < instance_.num_agents(); a++) {
            auto table = ConstraintTable::build(root.added, a, instance_);
            ConflictAvoidanceTable cat(plan, a);
            SpaceTimeAStar astar(instance_, a);
            auto path = astar.plan(table, cat);
            if (!path) {
                stats.status = SolveStatus::infeasible;
                stats.runtime_seconds = now_seconds() - start;
                return result;
            }
            root.cost += path_length(*path);
            plan[a] = std::move(*path);
        }
        root.conflict_count = static_cast<int>(detect_conflicts(plan).size());
        for (int a = 0; a < instance_.num_agents(); a++)
            root.replanned.emplace_back(a, std::move(plan[a]));
    }
    stats.root_cost = root.cost;
    stats.generated = 1;

    struct Entry {
        int f;
        int conflicts;
        uint64_t seq;
        int node;
        bool operator>(const Entry& o) const {
            if (f != o.f) return f > o.f;
            if (conflicts != o.conflicts) return conflicts > o.conflicts;
            return seq > o.seq;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
    uint64_t seq = 0;
    open.push({root.cost, root.conflict_count, seq++, 0});

    while (!open.empty()) {
        if (now_seconds() > deadline) {
            stats.status = SolveStatus::timeout;
            break;
        }
        const Entry entry = open.top();
        open.pop();
        const int id = entry.node;
        if (entry.f != arena[id].cost + arena[id].h) continue;  // superseded by h update

        std::vector<Path> plan = materialize_plan(arena, id);
        std::vector<Constraint> constraints = materialize_constraints(arena, id);
        std::vector<Conflict> conflicts = detect_conflicts(plan);

        if (conflicts.empty()) {
            stats.status = SolveStatus::solved;
            stats.solved = true;
            stats.soc = arena[id].cost;
            result.paths = std::move(plan);
            break;
        }

        if (!arena[id].h_computed) {
            ReasoningContext ctx(instance_, constraints, plan, &mdd_cache_);
            const int h = compute_heuristic(constraints, plan, conflicts, ctx, deadline);
            arena[id].h_computed = true;
            if (h >= kInfinity) continue;  // a pair is jointly unsolvable here
            arena[id].h = h;
            if (h > 0) {
                open.push({arena[id].cost + h, arena[id].conflict_count, seq++, id});
                continue;
            }
        }

        if (stats.expanded >= config_.node_limit) {
            stats.status = SolveStatus::node_limit_reached;
            break;
        }
        stats.expanded++;
        stats.max_f = std::max(stats.max_f, arena[id].cost + arena[id].h);

        ReasoningContext ctx(instance_, constraints, plan, &mdd_cache_);
        std::vector<ReasoningOutcome> outcomes;
        outcomes.reserve(conflicts.size());
        for (const auto& c : conflicts) outcomes.push_back(reason_symmetry(c, ctx, config_.flags));
        const size_t pick = select_conflict(outcomes);
        const ReasoningOutcome& winner = outcomes[pick];
        stats.branches_by_class[static_cast<size_t>(winner.symmetry_class)]++;
        if (split_observer_)
            split_observer_(conflicts[pick], winner.symmetry_class, constraints, winner.set1,
                            winner.set2);

        for (const auto* side : {&winner.set1, &winner.set2}) {
            std::vector<int> violators = violating_agents(*side, plan, instance_);
            assert(!violators.empty());
            if (violators.empty()) continue;

            std::vector<Constraint> child_constraints = constraints;
            child_constraints.insert(child_constraints.end(), side->begin(), side->end());

            std::vector<Path> child_plan = plan;
            bool pruned = false;
            for (int agent : violators) {
                auto table = ConstraintTable::build(child_constraints, agent, instance_);
                if (table.infeasible()) {
                    pruned = true;
                    break;
                }
                ConflictAvoidanceTable cat(child_plan, agent);
                SpaceTimeAStar astar(instance_, agent);
                auto path = astar.plan(table, cat);
                if (!path) {
                    pruned = true;
                    break;
                }
                child_plan[agent] = std::move(*path);
            }
            if (pruned) continue;

            CtNode child;
            child.parent = id;
            child.added = *side;
            child.depth = arena[id].depth + 1;
            child.cost = 0;
            for (const auto& p : child_plan) child.cost += path_length(p);
            if (child.cost < arena[id].cost) stats.monotone_costs = false;
            child.conflict_count = arena[id].conflict_count -
                                   conflicts_touching(plan, violators) +
                                   conflicts_touching(child_plan, violators);
            for (int agent : violators) child.replanned.emplace_back(agent, child_plan[agent]);

            const int child_id = static_cast<int>(arena.size());
            arena.push_back(std::move(child));
            stats.generated++;
            open.push({arena[child_id].cost, arena[child_id].conflict_count, seq++, child_id});
        }
    }
    if (open.empty() && !stats.solved && stats.status == SolveStatus::timeout)
        stats.status = SolveStatus::infeasible;
    stats.runtime_seconds = now_seconds() - start;
    return result;
}

}  // namespace sympath
