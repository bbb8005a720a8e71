#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympath {

/// Cell index into a grid, row-major: v = y * width + x. -1 means "no vertex".
using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// Large-but-safe stand-in for an unreachable timestep / distance.
inline constexpr int kInfinity = 1 << 28;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// 4-neighbor grid. Vertices are the unblocked cells; edges connect
/// orthogonally adjacent unblocked cells.
class GridMap {
public:
    GridMap(int width, int height, std::vector<uint8_t> blocked);

    /// movingai .map format: `type octile`, `height H`, `width W`, `map`,
    /// then H rows of W symbols. '.'/'G' passable, '@'/'O'/'T'/'S'/'W' blocked.
    /// Throws ParseError naming the offending line.
    static GridMap parse(std::istream& in);
    static GridMap parse_text(const std::string& text);
    static GridMap load(const std::string& path);

    /// Re-serializes to the exact movingai text this map parses from.
    std::string serialize() const;

    int width() const { return width_; }
    int height() const { return height_; }
    int size() const { return width_ * height_; }
    int num_unblocked() const { return num_unblocked_; }

    bool in_bounds(int x, int y) const { return 0 <= x && x < width_ && 0 <= y && y < height_; }
    bool blocked(int x, int y) const { return blocked_[y * width_ + x] != 0; }
    bool passable(Vertex v) const { return v >= 0 && blocked_[v] == 0; }

    Vertex vertex(int x, int y) const { return y * width_ + x; }
    int x_of(Vertex v) const { return v % width_; }
    int y_of(Vertex v) const { return v / width_; }

    /// Unblocked orthogonal neighbors, in N, S, W, E order. Count in .second.
    std::pair<std::array<Vertex, 4>, int> neighbors(Vertex v) const;
    int degree(Vertex v) const { return neighbors(v).second; }

    /// Breadth-first exact move counts from source to every vertex;
    /// unreachable cells get kInfinity. Source must be unblocked.
    std::vector<int> true_distance(Vertex source) const;

private:
    int width_;
    int height_;
    int num_unblocked_;
    std::vector<uint8_t> blocked_;
};

}  // namespace sympath
