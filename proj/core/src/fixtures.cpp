#include "sympath/fixtures.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace sympath {
namespace fixtures {

GridMap grid_from_rows(const std::vector<std::string>& rows) {
    std::ostringstream text;
    text << "type octile\nheight " << rows.size() << "\nwidth " << rows[0].size() << "\nmap\n";
    for (const auto& row : rows) {
        for (char c : row) text << (c == '.' || c == 'G' ? '.' : '@');
        text << "\n";
    }
    return GridMap::parse_text(text.str());
}

GridMap open_map(int width, int height) {
    return GridMap(width, height, std::vector<uint8_t>(width * height, 0));
}

Instance square_crossing(int n) {
    if (n < 4) throw std::invalid_argument("square_crossing needs n >= 4");
    GridMap map = open_map(n, n);
    AgentSpec a1{map.vertex(0, 1), map.vertex(n - 1, n - 2)};
    AgentSpec a2{map.vertex(1, 0), map.vertex(n - 2, n - 1)};
    return Instance(std::move(map), {a1, a2});
}

Instance small_crossing() {
    GridMap map = open_map(6, 6);
    AgentSpec a1{map.vertex(2, 1), map.vertex(3, 5)};
    AgentSpec a2{map.vertex(1, 2), map.vertex(5, 4)};
    return Instance(std::move(map), {a1, a2});
}

Instance parked_blocker(int d) {
    if (d < 2) throw std::invalid_argument("parked_blocker needs d >= 2");
    const int width = d + 2;
    std::vector<std::string> rows(3, std::string(width, '@'));
    rows[1] = std::string(width, '.');
    rows[2][d - 1] = '.';  // passing bay above the parking cell's neighbor
    GridMap map = grid_from_rows(rows);
    AgentSpec a1{map.vertex(0, 1), map.vertex(d + 1, 1)};
    AgentSpec a2{map.vertex(d - 1, 1), map.vertex(d, 1)};
    return Instance(std::move(map), {a1, a2});
}

Instance one_edge_squeeze() {
    // Single lane with two mid-lane stubs. The stubs give the conflicting
    // cells degree 3, so the squeeze is not a corridor, yet every single-wait
    // detour still collides head-on; tucking into a stub costs 2.
    std::vector<std::string> rows = {
        ".@@@@.",
        "......",
        ".@..@.",
    };
    GridMap map = grid_from_rows(rows);
    AgentSpec a1{map.vertex(0, 2), map.vertex(5, 2)};
    AgentSpec a2{map.vertex(5, 0), map.vertex(0, 0)};
    return Instance(std::move(map), {a1, a2});
}

Instance head_on_corridor(int k) {
    if (k < 2) throw std::invalid_argument("head_on_corridor needs k >= 2");
    const int width = k + 1;
    std::vector<std::string> rows(4, std::string(width, '@'));
    rows[2] = std::string(width, '.');
    rows[1][0] = '.';
    rows[1][k] = '.';
    rows[3][0] = '.';
    rows[3][k] = '.';
    GridMap map = grid_from_rows(rows);
    AgentSpec a1{map.vertex(0, 3), map.vertex(k, 3)};
    AgentSpec a2{map.vertex(k, 1), map.vertex(0, 1)};
    return Instance(std::move(map), {a1, a2});
}

namespace {

bool connected(const GridMap& map) {
    Vertex source = kNoVertex;
    for (Vertex v = 0; v < map.size() && source == kNoVertex; v++)
        if (map.passable(v)) source = v;
    if (source == kNoVertex) return false;
    auto dist = map.true_distance(source);
    for (Vertex v = 0; v < map.size(); v++)
        if (map.passable(v) && dist[v] >= kInfinity) return false;
    return true;
}

}  // namespace

Instance random_instance(int width, int height, int blocked, int num_agents, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int cells = width * height;
    if (blocked + 2 * num_agents > cells)
        throw std::invalid_argument("random_instance: map too small");

    while (true) {
        std::vector<int> order(cells);
        for (int i = 0; i < cells; i++) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<uint8_t> blocked_cells(cells, 0);
        for (int i = 0; i < blocked; i++) blocked_cells[order[i]] = 1;
        GridMap map(width, height, blocked_cells);
        if (map.num_unblocked() < 2 * num_agents || !connected(map)) continue;

        std::vector<Vertex> free;
        for (Vertex v = 0; v < cells; v++)
            if (map.passable(v)) free.push_back(v);
        std::shuffle(free.begin(), free.end(), rng);
        std::vector<AgentSpec> agents;
        for (int i = 0; i < num_agents; i++)
            agents.push_back({free[2 * i], free[2 * i + 1]});
        return Instance(std::move(map), std::move(agents));
    }
}

}  // namespace fixtures
}  // namespace sympath
