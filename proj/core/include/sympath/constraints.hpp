#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "sympath/instance.hpp"

namespace sympath {

struct SpaceTimeNode {
    Vertex v = kNoVertex;
    int t = -1;
    bool operator==(const SpaceTimeNode&) const = default;
    auto operator<=>(const SpaceTimeNode&) const = default;
};

/// Prohibits the agent from being at v at timestep t.
struct VertexConstraint {
    Vertex v;
    int t;
};

/// Prohibits the agent from moving from `from` to `to` at timestep t
/// (i.e. occupying `from` at t-1 and `to` at t).
struct EdgeConstraint {
    Vertex from, to;
    int t;
};

/// A set of vertex constraints along a rectangle exit border.
struct BarrierConstraint {
    std::vector<SpaceTimeNode> nodes;
};

/// Prohibits the agent from v at every timestep in [t_min, t_max].
/// t_max == kInfinity means "forever".
struct RangeConstraint {
    Vertex v;
    int t_min, t_max;
};

/// Path length must be strictly greater than `bound`.
struct LengthLowerConstraint {
    int bound;
};

/// Path length must be at most `bound`. Additionally bars every other agent
/// from this agent's target at timesteps >= bound.
struct LengthUpperConstraint {
    int bound;
};

using ConstraintBody = std::variant<VertexConstraint, EdgeConstraint, BarrierConstraint,
                                    RangeConstraint, LengthLowerConstraint,
                                    LengthUpperConstraint>;

struct Constraint {
    int agent = -1;
    ConstraintBody body;
};

std::string to_string(const Constraint& c);

/// Canonical string encoding of the constraints binding one agent, used as a
/// cache key for MDDs and pairwise sub-solves.
std::string constraint_signature(std::span<const Constraint> constraints, int agent,
                                 const Instance& instance);

/// Per-agent index of everything the low level must respect: prohibited
/// (vertex, t) and (edge, t) pairs, per-vertex "blocked at and after t"
/// horizons, and the allowed path-length window [min_length, max_length].
class ConstraintTable {
public:
    ConstraintTable() = default;

    /// Encodes exactly the constraints binding `agent`, including the
    /// prohibitions induced on it by other agents' length-upper constraints.
    static ConstraintTable build(std::span<const Constraint> constraints, int agent,
                                 const Instance& instance);

    bool vertex_allowed(Vertex v, int t) const;
    bool edge_allowed(Vertex from, Vertex to, int t) const;
    /// True iff the agent may sit at v from timestep t onward forever.
    bool can_park(Vertex v, int t) const;

    int min_length() const { return min_length_; }
    int max_length() const { return max_length_; }
    /// Contradictory length window; the CT node is unsolvable for this agent.
    bool infeasible() const { return min_length_ > max_length_; }

    /// Largest finite timestep mentioned by any prohibition or bound; after
    /// this the environment seen by the agent is static.
    int max_constrained_timestep() const { return max_constrained_t_; }

    void add_vertex_ban(Vertex v, int t);
    void add_edge_ban(Vertex from, Vertex to, int t);
    void add_blocked_from(Vertex v, int t);
    void add_length_window(int min_length, int max_length);

    /// True iff `path` (with its implicit stay-at-target tail) satisfies
    /// every entry of this table, including the length window.
    bool satisfied_by(const std::vector<Vertex>& path) const;

private:
    static uint64_t vt_key(Vertex v, int t) { return (static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(t); }
    std::unordered_set<uint64_t> banned_vertices_;
    std::unordered_map<uint64_t, std::vector<Vertex>> banned_edges_;  // key(to,t) -> froms
    std::unordered_map<Vertex, int> blocked_from_;
    std::unordered_map<Vertex, int> last_finite_ban_;
    int min_length_ = 0;
    int max_length_ = kInfinity;
    int max_constrained_t_ = 0;
};

}  // namespace sympath
