#pragma once

#include <cstdint>

#include "sympath/instance.hpp"

namespace sympath {
namespace fixtures {

/// Map from ASCII rows ('.'/'G' passable, anything else blocked).
GridMap grid_from_rows(const std::vector<std::string>& rows);

GridMap open_map(int width, int height);

/// Two agents crossing an open n x n square (n >= 4); every pair of their
/// shortest paths collides inside an (n-2) x (n-2) area, so the optimal sum
/// of costs is one above the sum of individual shortest lengths. n = 4 is the
/// smallest interesting case.
Instance square_crossing(int n);

/// Two agents whose paths cross a 2 x 3 conflicting area; the classic worked
/// example whose exit-border barriers are known in closed form.
Instance small_crossing();

/// One-lane road of length d+1 with a single passing bay: the second agent
/// parks one step from its start while the first still has to drive past it.
/// d is the distance between the first agent's start and the parking cell
/// (d >= 2).
Instance parked_blocker(int d);

/// H-shaped map where two agents squeeze through a one-edge bottleneck in
/// opposite directions; every single-wait detour still collides.
Instance one_edge_squeeze();

/// Corridor of length k (k >= 2) traversed head-on by two agents.
Instance head_on_corridor(int k);

/// Uniform-random map with exactly `blocked` obstacle cells, resampled until
/// the free cells form one connected component, plus m agents with pairwise
/// distinct starts and targets. Deterministic in `seed`.
Instance random_instance(int width, int height, int blocked, int num_agents, uint64_t seed);

}  // namespace fixtures
}  // namespace sympath
