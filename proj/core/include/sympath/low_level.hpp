#pragma once

#include <optional>

#include "sympath/path.hpp"

namespace sympath {

/// Counts how often each (vertex, t) / (edge, t) is used by the other agents'
/// paths, including their stay-at-target tails. Used for tie-breaking.
class ConflictAvoidanceTable {
public:
    ConflictAvoidanceTable() = default;
    ConflictAvoidanceTable(const std::vector<Path>& paths, int skip_agent);

    int horizon() const { return horizon_; }
    /// Number of vertex + edge collisions a step into (v, t) from `from` incurs.
    int step_conflicts(Vertex from, Vertex to, int t) const;

private:
    static uint64_t vt_key(Vertex v, int t) { return (static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(t); }
    std::unordered_map<uint64_t, int> vertex_count_;
    std::unordered_map<uint64_t, std::vector<std::pair<Vertex, Vertex>>> edges_at_;  // t -> (from,to)
    std::unordered_map<Vertex, std::pair<int, int>> parked_;  // v -> (from_t, count)
    int horizon_ = 0;
};

/// Edge/vertex exclusions for "reach x without using the corridor" queries.
struct TravelExclusions {
    std::vector<std::pair<Vertex, Vertex>> edges;  // excluded in both directions
    std::vector<Vertex> vertices;
    bool edge_excluded(Vertex a, Vertex b) const;
    bool vertex_excluded(Vertex v) const;
};

/// Single-agent planner over (vertex, timestep) states. Honors every
/// constraint kind via the ConstraintTable, breaks length ties by fewest
/// conflicts with the other agents' paths, then FIFO on generation order.
/// Not re-entrant; create one per query site.
class SpaceTimeAStar {
public:
    SpaceTimeAStar(const Instance& instance, int agent);

    /// Minimum-length path satisfying `table`, or nullopt if none exists
    /// within the horizon |V| + max constrained timestep + 1.
    std::optional<Path> plan(const ConstraintTable& table, const ConflictAvoidanceTable& cat);

    /// Earliest timestep at which the agent can occupy x under `table`
    /// (ignoring the length window), or kInfinity. With `excluded`, paths
    /// may not traverse any excluded edge (either direction) or vertex.
    int earliest_arrival(Vertex x, const ConstraintTable& table,
                         const TravelExclusions* excluded = nullptr);

private:
    const Instance& instance_;
    int agent_;
    Vertex start_;
    Vertex target_;
};

}  // namespace sympath
