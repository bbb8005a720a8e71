#pragma once

#include <array>
#include <functional>

#include "sympath/symmetry.hpp"

namespace sympath {

struct SolverConfig {
    std::string name = "none";
    HeuristicMode heuristic = HeuristicMode::cg;
    ReasoningFlags flags;
    double time_limit_seconds = 60.0;
    uint64_t node_limit = UINT64_MAX;

    /// none|r|rm|gr|t|c|pc|stc|gc|rtc|cbsh2|cbsh2-rtc ("none" is plain CBSH:
    /// conflict prioritization plus the cardinal-graph heuristic).
    static SolverConfig from_name(const std::string& name);
    static const std::vector<std::string>& known_names();
};

enum class SolveStatus { solved, timeout, node_limit_reached, infeasible };

struct SolveStats {
    SolveStatus status = SolveStatus::timeout;
    bool solved = false;
    int soc = -1;
    int root_cost = -1;
    uint64_t expanded = 0;   // nodes popped and branched
    uint64_t generated = 0;  // children pushed
    double runtime_seconds = 0.0;
    // Branching events by the class of the chosen conflict's split.
    std::array<uint64_t, 4> branches_by_class{};  // indexed by SymmetryClass
    int max_f = 0;                                // max (cost + h) over expanded nodes
    bool monotone_costs = true;                   // child cost >= parent cost throughout
    uint64_t branched_with_class() const {
        return branches_by_class[0] + branches_by_class[1] + branches_by_class[2] +
               branches_by_class[3];
    }
};

struct SolveResult {
    SolveStats stats;
    std::vector<Path> paths;  // empty unless solved
};

/// Observes every split: the node's accumulated constraints and the two
/// constraint sets handed to the children.
using SplitObserver = std::function<void(
    const Conflict&, SymmetryClass, const std::vector<Constraint>& node_constraints,
    const std::vector<Constraint>& set1, const std::vector<Constraint>& set2)>;

/// Conflict-Based Search with admissible high-level heuristics and pairwise
/// symmetry reasoning. One solve() call is single-threaded; distinct solvers
/// may run concurrently on the same Instance.
class CbsSolver {
public:
    CbsSolver(const Instance& instance, SolverConfig config);

    SolveResult solve();
    /// Solve with constraints preloaded into the root CT node (used by the
    /// pairwise sub-solver and by tests that reconstruct mid-search nodes).
    SolveResult solve(std::vector<Constraint> root_constraints);

    void set_split_observer(SplitObserver observer) { split_observer_ = std::move(observer); }

private:
    struct CtNode;
    const Instance& instance_;
    SolverConfig config_;
    SplitObserver split_observer_;
    MddCache mdd_cache_;

    // WDG memoization: pair + binding-constraint signature -> cost delta.
    std::unordered_map<std::string, int> wdg_memo_;

    std::vector<Path> materialize_plan(const std::vector<CtNode>& arena, int node) const;
    std::vector<Constraint> materialize_constraints(const std::vector<CtNode>& arena,
                                                    int node) const;
    int compute_heuristic(const std::vector<Constraint>& constraints,
                          const std::vector<Path>& plan, const std::vector<Conflict>& conflicts,
                          ReasoningContext& ctx, double deadline);
    int wdg_edge_weight(int a1, int a2, const std::vector<Constraint>& constraints,
                        const std::vector<Path>& plan, double deadline, bool& infeasible);
};

}  // namespace sympath
