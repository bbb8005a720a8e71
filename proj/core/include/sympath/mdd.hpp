#pragma once

#include <memory>
#include <span>

#include "sympath/constraints.hpp"
#include "sympath/path.hpp"

namespace sympath {

/// Layered DAG of all length-`cost` paths of one agent that satisfy a
/// constraint table. Layer t holds the vertices reachable at timestep t on
/// some such path; every node lies on at least one source-to-sink path.
/// Immutable after build.
class Mdd {
public:
    /// Empty MDD signals an infeasible (agent, table, cost) combination.
    static Mdd build(const Instance& instance, int agent, const ConstraintTable& table,
                     int cost);

    bool empty() const { return layers_.empty(); }
    int cost() const { return static_cast<int>(layers_.size()) - 1; }
    int num_layers() const { return static_cast<int>(layers_.size()); }
    std::span<const Vertex> layer(int t) const { return layers_[t]; }
    bool contains(Vertex v, int t) const;
    /// Successor vertices of (v, t) in layer t+1.
    std::span<const Vertex> successors(Vertex v, int t) const;

    /// Layers of size one, in timestep order. Always includes the first and
    /// last layer of a non-empty MDD.
    std::vector<SpaceTimeNode> singletons() const;

    /// True iff every source-to-sink path visits some prohibited node.
    bool blocks_all_paths(std::span<const SpaceTimeNode> prohibited) const;

    /// One line per layer: `t: v1 v2 ...` (test fixture format).
    std::string dump() const;

private:
    int index_of(Vertex v, int t) const;
    std::vector<std::vector<Vertex>> layers_;               // sorted per layer
    std::vector<std::vector<std::vector<Vertex>>> children_;  // [t][node idx] -> next layer
};

/// Cache of MDDs keyed by (agent, binding-constraint signature, cost).
/// Access is serialized; entries are shared immutable.
class MddCache {
public:
    std::shared_ptr<const Mdd> get(const Instance& instance, int agent,
                                   std::span<const Constraint> constraints,
                                   const ConstraintTable& table, int cost);
    void clear();

private:
    std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<const Mdd>> cache_;
};

}  // namespace sympath
