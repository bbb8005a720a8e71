#pragma once

#include <optional>

#include "sympath/conflict.hpp"

namespace sympath {
namespace oracle {

struct JointResult {
    bool solved = false;
    bool infeasible = false;  // no solution within the horizon
    int soc = kInfinity;
    std::vector<Path> paths;
};

/// A* in the joint-state space under the classic semantics: vertex + swap
/// conflicts, stay-at-target, minimum sum of costs. Exact; desk scale only
/// (m <= 4, small grids). Horizon defaults to m * (|V| + m).
JointResult joint_state_astar(const Instance& instance, int horizon = -1);

/// All paths for `agent` of length <= max_length that satisfy `table`.
/// Returns nullopt when the number of paths exceeds `budget`.
std::optional<std::vector<Path>> enumerate_paths(const Instance& instance, int agent,
                                                 int max_length, size_t budget,
                                                 const ConstraintTable* table = nullptr);

enum class Verdict { disjunctive, counterexample, inconclusive };

struct DisjunctiveReport {
    Verdict verdict = Verdict::inconclusive;
    // Populated for Verdict::counterexample: a conflict-free pair of paths
    // violating both constraint sets.
    Path path1, path2;
    size_t pairs_checked = 0;
};

/// Exhaustively checks mutual disjunctiveness of two constraint sets over
/// agents `a1` and `a2`: enumerates every pair of conflict-free paths with
/// per-agent cost <= constrained shortest + slack and verifies each pair
/// satisfies at least one set (a pair satisfies a set iff it violates none of
/// its constraints, including the prohibitions a length-upper induces on the
/// other agent). `base` holds the CT node's existing constraints: only pairs
/// satisfying them are quantified over, matching the splitting lemma's
/// premise. Budget overrun yields `inconclusive`.
DisjunctiveReport verify_mutually_disjunctive(const Instance& instance, int a1, int a2,
                                              std::span<const Constraint> set1,
                                              std::span<const Constraint> set2,
                                              std::span<const Constraint> base = {},
                                              int slack = 3, size_t path_budget = 60000,
                                              size_t pair_budget = 4000000);

}  // namespace oracle
}  // namespace sympath
