#pragma once

#include <vector>

#include "sympath/constraints.hpp"

namespace sympath {

/// Timestep-indexed vertex sequence; consecutive entries are adjacent or
/// identical. Length is size() - 1. Agents stay at the last vertex forever.
using Path = std::vector<Vertex>;

inline int path_length(const Path& p) { return static_cast<int>(p.size()) - 1; }

/// Position at timestep t, with the stay-at-target tail made explicit.
inline Vertex position_at(const Path& p, int t) {
    if (t < 0) return p.front();
    return t < static_cast<int>(p.size()) ? p[static_cast<size_t>(t)] : p.back();
}

/// Whether `agent`'s path breaks constraint `c`. For length-upper constraints
/// of another agent, checks the induced "keep off the target" prohibition.
bool violates(const Constraint& c, int agent, const Path& path, const Instance& instance);

/// Agents (in increasing order) whose paths break at least one constraint in
/// `added`.
std::vector<int> violating_agents(std::span<const Constraint> added,
                                  const std::vector<Path>& plan, const Instance& instance);

}  // namespace sympath
