#pragma once

#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace sympath {

/// Exact minimum vertex cover size via branch and bound. Vertices 0..n-1;
/// graphs here are tiny (one vertex per agent in conflict).
int min_vertex_cover(int n, std::span<const std::pair<int, int>> edges);

/// Exact edge-weighted minimum vertex cover: nonnegative integers x_v
/// minimizing the sum subject to x_u + x_v >= w for every edge (u, v, w).
int edge_weighted_mvc(int n, std::span<const std::tuple<int, int, int>> edges);

}  // namespace sympath
