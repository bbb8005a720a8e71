#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "sympath/grid_map.hpp"

namespace sympath {

struct AgentSpec {
    Vertex start = kNoVertex;
    Vertex target = kNoVertex;
};

/// A map plus an ordered list of agents. Immutable after construction and
/// safe to share read-only across concurrent solver runs; the lazy distance
/// table cache is internally synchronized.
class Instance {
public:
    Instance(GridMap map, std::vector<AgentSpec> agents);

    /// movingai .scen format: `version 1` header, then rows
    /// `bucket map width height sx sy gx gy dist`. Takes the first
    /// `num_agents` rows (all rows if num_agents < 0). Coordinates are
    /// validated against the map; bad rows raise ParseError.
    static std::vector<AgentSpec> parse_scen(std::istream& in, const GridMap& map,
                                             int num_agents = -1);
    static Instance load(const std::string& map_path, const std::string& scen_path,
                         int num_agents);

    const GridMap& map() const { return map_; }
    int num_agents() const { return static_cast<int>(agents_.size()); }
    const AgentSpec& agent(int i) const { return agents_[i]; }
    const std::vector<AgentSpec>& agents() const { return agents_; }

    /// Exact distance table from `source`, computed on first use and cached
    /// for the lifetime of the instance.
    const std::vector<int>& distances_from(Vertex source) const;
    int distance(Vertex from, Vertex to) const { return distances_from(to)[from]; }

private:
    struct DistanceCache {
        std::mutex mutex;
        std::unordered_map<Vertex, std::shared_ptr<const std::vector<int>>> tables;
    };
    GridMap map_;
    std::vector<AgentSpec> agents_;
    mutable std::unique_ptr<DistanceCache> cache_ = std::make_unique<DistanceCache>();
};

}  // namespace sympath
