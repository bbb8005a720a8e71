#include "sympath/rectangle.hpp"

#include <algorithm>
#include <cassert>

namespace sympath {

namespace {

struct Cell {
    int x, y;
    bool operator==(const Cell&) const = default;
};

struct StNode {
    Cell cell;
    int t;
};

int sgn(int v) { return (v > 0) - (v < 0); }

struct Corners {
    Cell rs, rg, r1, r2;
    int t_of(const Cell& u, const StNode& s1) const {
        return s1.t + std::abs(s1.cell.x - u.x) + std::abs(s1.cell.y - u.y);
    }
};

// Eqs: both segments Manhattan-optimal and nonzero, same axis directions.
bool is_rectangle_candidate(const StNode& s1, const StNode& s2, const StNode& g1,
                            const StNode& g2, bool segments) {
    if (std::abs(s1.cell.x - g1.cell.x) + std::abs(s1.cell.y - g1.cell.y) != g1.t - s1.t ||
        g1.t - s1.t <= 0)
        return false;
    if (std::abs(s2.cell.x - g2.cell.x) + std::abs(s2.cell.y - g2.cell.y) != g2.t - s2.t ||
        g2.t - s2.t <= 0)
        return false;
    if ((s1.cell.x - g1.cell.x) * (s2.cell.x - g2.cell.x) < 0) return false;
    if ((s1.cell.y - g1.cell.y) * (s2.cell.y - g2.cell.y) < 0) return false;
    if (segments) {
        // Start nodes must sit on different sides of the rectangle.
        long prod = static_cast<long>(s1.cell.x - s2.cell.x) * (s1.cell.y - s2.cell.y) *
                    (s1.cell.x - g1.cell.x) * (s1.cell.y - g1.cell.y);
        if (prod > 0) return false;
        if (s1.cell == s2.cell && s1.t == s2.t) return false;
    }
    return true;
}

std::optional<Corners> compute_corners(const StNode& s1, const StNode& s2, const StNode& g1,
                                       const StNode& g2) {
    const int x_lo = std::max(std::min(s1.cell.x, g1.cell.x), std::min(s2.cell.x, g2.cell.x));
    const int x_hi = std::min(std::max(s1.cell.x, g1.cell.x), std::max(s2.cell.x, g2.cell.x));
    const int y_lo = std::max(std::min(s1.cell.y, g1.cell.y), std::min(s2.cell.y, g2.cell.y));
    const int y_hi = std::min(std::max(s1.cell.y, g1.cell.y), std::max(s2.cell.y, g2.cell.y));
    if (x_lo > x_hi || y_lo > y_hi) return std::nullopt;

    int dx = sgn(g1.cell.x - s1.cell.x);
    if (dx == 0) dx = sgn(g2.cell.x - s2.cell.x);
    int dy = sgn(g1.cell.y - s1.cell.y);
    if (dy == 0) dy = sgn(g2.cell.y - s2.cell.y);

    Corners c;
    c.rs = {dx >= 0 ? x_lo : x_hi, dy >= 0 ? y_lo : y_hi};
    c.rg = {dx >= 0 ? x_hi : x_lo, dy >= 0 ? y_hi : y_lo};
    const Cell far_x{c.rg.x, c.rs.y};  // crossed by the agent ahead in y
    const Cell far_y{c.rs.x, c.rg.y};  // crossed by the agent ahead in x

    // The agent whose start leads along x exits through the far-y border;
    // ties fall back to the y ordering.
    const int ahead_x = (s1.cell.x - s2.cell.x) * (dx == 0 ? 1 : dx);
    const int ahead_y = (s1.cell.y - s2.cell.y) * (dy == 0 ? 1 : dy);
    if (ahead_x > 0) {
        c.r1 = far_y;
        c.r2 = far_x;
    } else if (ahead_x < 0) {
        c.r1 = far_x;
        c.r2 = far_y;
    } else if (ahead_y < 0) {
        c.r1 = far_y;
        c.r2 = far_x;
    } else if (ahead_y > 0) {
        c.r1 = far_x;
        c.r2 = far_y;
    } else {
        return std::nullopt;  // identical start cells
    }
    // Barrier timesteps must agree whether measured from S1 or S2.
    if (c.t_of(c.rg, s1) != c.t_of(c.rg, s2) || c.t_of(c.rs, s1) != c.t_of(c.rs, s2))
        return std::nullopt;
    return c;
}

// Exit border of agent i runs from r_i to rg; the relevant classification
// axis is the one the border spans.
bool exit_border_cuts_all(const Corners& c, const Cell& ri, const StNode& si,
                          const StNode& gi) {
    if (ri.y == c.rg.y)
        return ri.x - c.rg.x == si.cell.x - gi.cell.x;
    return ri.y - c.rg.y == si.cell.y - gi.cell.y;
}

Cardinality classify_corners(const Corners& c, const StNode& s1, const StNode& s2,
                             const StNode& g1, const StNode& g2) {
    const bool cut1 = exit_border_cuts_all(c, c.r1, s1, g1);
    const bool cut2 = exit_border_cuts_all(c, c.r2, s2, g2);
    if (cut1 && cut2) return Cardinality::cardinal;
    if (cut1 || cut2) return Cardinality::semi_cardinal;
    return Cardinality::non_cardinal;
}

std::vector<SpaceTimeNode> border_nodes(const Corners& c, const Cell& ri, const StNode& s1,
                                        const GridMap& map) {
    std::vector<SpaceTimeNode> out;
    const int steps = std::abs(ri.x - c.rg.x) + std::abs(ri.y - c.rg.y);
    const int step_x = sgn(c.rg.x - ri.x);
    const int step_y = sgn(c.rg.y - ri.y);
    Cell at = ri;
    for (int i = 0; i <= steps; i++) {
        out.push_back({map.vertex(at.x, at.y), c.t_of(at, s1)});
        at.x += step_x;
        at.y += step_y;
    }
    return out;
}

int rect_area(const Corners& c) {
    return std::abs(c.r1.x - c.r2.x) * std::abs(c.r1.y - c.r2.y);
}

std::optional<RectangleFinding> build_finding(const Conflict& c, ReasoningContext& ctx,
                                              const Corners& corners, const StNode& s1,
                                              const StNode& s2, Cardinality cardinality,
                                              bool restrict_to_mdd) {
    const GridMap& map = ctx.instance().map();
    RectangleFinding f;
    f.cardinality = cardinality;
    f.rs = {map.vertex(corners.rs.x, corners.rs.y), corners.t_of(corners.rs, s1)};
    f.rg = {map.vertex(corners.rg.x, corners.rg.y), corners.t_of(corners.rg, s1)};
    f.r1 = {map.vertex(corners.r1.x, corners.r1.y), corners.t_of(corners.r1, s1)};
    f.r2 = {map.vertex(corners.r2.x, corners.r2.y), corners.t_of(corners.r2, s2)};
    f.barrier1 = border_nodes(corners, corners.r1, s1, map);
    f.barrier2 = border_nodes(corners, corners.r2, s2, map);
    if (restrict_to_mdd) {
        auto keep_on = [](const Mdd& mdd, std::vector<SpaceTimeNode>& nodes) {
            std::erase_if(nodes, [&](const SpaceTimeNode& n) { return !mdd.contains(n.v, n.t); });
        };
        keep_on(ctx.mdd(c.a1), f.barrier1);
        keep_on(ctx.mdd(c.a2), f.barrier2);
    }
    if (f.barrier1.empty() || f.barrier2.empty()) return std::nullopt;
    for (const auto& n : f.barrier1)
        if (n.t <= 0) return std::nullopt;
    for (const auto& n : f.barrier2)
        if (n.t <= 0) return std::nullopt;

    f.set1.push_back({c.a1, BarrierConstraint{f.barrier1}});
    f.set2.push_back({c.a2, BarrierConstraint{f.barrier2}});
    if (!violates(f.set1.front(), c.a1, ctx.path(c.a1), ctx.instance())) return std::nullopt;
    if (!violates(f.set2.front(), c.a2, ctx.path(c.a2), ctx.instance())) return std::nullopt;
    return f;
}

}  // namespace

std::optional<RectangleFinding> detect_rectangle_entire(const Conflict& c,
                                                        ReasoningContext& ctx) {
    if (c.is_edge) return std::nullopt;
    const GridMap& map = ctx.instance().map();
    const auto& spec1 = ctx.instance().agent(c.a1);
    const auto& spec2 = ctx.instance().agent(c.a2);
    const StNode s1{{map.x_of(spec1.start), map.y_of(spec1.start)}, 0};
    const StNode s2{{map.x_of(spec2.start), map.y_of(spec2.start)}, 0};
    const StNode g1{{map.x_of(spec1.target), map.y_of(spec1.target)},
                    path_length(ctx.path(c.a1))};
    const StNode g2{{map.x_of(spec2.target), map.y_of(spec2.target)},
                    path_length(ctx.path(c.a2))};
    if (!is_rectangle_candidate(s1, s2, g1, g2, false)) return std::nullopt;
    auto corners = compute_corners(s1, s2, g1, g2);
    if (!corners) return std::nullopt;
    return build_finding(c, ctx, *corners, s1, s2, classify_corners(*corners, s1, s2, g1, g2),
                         false);
}

std::optional<RectangleFinding> detect_rectangle_segments(const Conflict& c,
                                                          ReasoningContext& ctx) {
    if (c.is_edge) return std::nullopt;
    const GridMap& map = ctx.instance().map();
    const Mdd& mdd1 = ctx.mdd(c.a1);
    const Mdd& mdd2 = ctx.mdd(c.a2);
    if (mdd1.empty() || mdd2.empty()) return std::nullopt;

    auto as_node = [&](const SpaceTimeNode& n) {
        return StNode{{map.x_of(n.v), map.y_of(n.v)}, n.t};
    };
    std::vector<StNode> starts1, goals1, starts2, goals2;
    for (const auto& n : mdd1.singletons()) {
        if (n.t <= c.t) starts1.push_back(as_node(n));
        if (n.t >= c.t) goals1.push_back(as_node(n));
    }
    for (const auto& n : mdd2.singletons()) {
        if (n.t <= c.t) starts2.push_back(as_node(n));
        if (n.t >= c.t) goals2.push_back(as_node(n));
    }

    struct Best {
        Corners corners;
        StNode s1, s2, g1, g2;
        Cardinality type;
        int area;
    };
    std::optional<Best> best;
    for (const auto& s1 : starts1)
        for (const auto& s2 : starts2)
            for (const auto& g1 : goals1)
                for (const auto& g2 : goals2) {
                    if (!is_rectangle_candidate(s1, s2, g1, g2, true)) continue;
                    auto corners = compute_corners(s1, s2, g1, g2);
                    if (!corners) continue;
                    Cardinality type = classify_corners(*corners, s1, s2, g1, g2);
                    int area = rect_area(*corners);
                    if (!best || type > best->type ||
                        (type == best->type && area > best->area)) {
                        best = Best{*corners, s1, s2, g1, g2, type, area};
                    }
                }
    if (!best) return std::nullopt;
    return build_finding(c, ctx, best->corners, best->s1, best->s2, best->type, true);
}

namespace {

// Boundary tracing over edgels (cell, outward direction). Directions cycle
// N -> E -> S -> W; from an edgel we prefer turning into the diagonal cell,
// then continuing straight, then turning around our own corner.
constexpr int kDx[4] = {0, 1, 0, -1};
constexpr int kDy[4] = {-1, 0, 1, 0};

struct Edgel {
    Vertex cell;
    int dir;
    bool operator==(const Edgel&) const = default;
};

struct EdgelHash {
    size_t operator()(const Edgel& e) const {
        return std::hash<uint64_t>()((static_cast<uint64_t>(e.cell) << 2) | e.dir);
    }
};

}  // namespace

std::optional<GeneralizedRectangle> find_conflicting_area(const Conflict& c,
                                                          ReasoningContext& ctx) {
    if (c.is_edge) return std::nullopt;
    const GridMap& map = ctx.instance().map();
    const Mdd& mdd1 = ctx.mdd(c.a1);
    const Mdd& mdd2 = ctx.mdd(c.a2);
    if (mdd1.empty() || mdd2.empty()) return std::nullopt;

    // Vertex projection: cell -> its unique MDD timestep, or -1 when the MDD
    // visits the cell at several timesteps.
    auto project = [&](const Mdd& mdd) {
        std::unordered_map<Vertex, int> unique_t;
        for (int t = 0; t < mdd.num_layers(); t++) {
            for (Vertex v : mdd.layer(t)) {
                auto [it, inserted] = unique_t.emplace(v, t);
                if (!inserted && it->second != t) it->second = -1;
            }
        }
        return unique_t;
    };
    const auto m1 = project(mdd1);
    const auto m2 = project(mdd2);

    auto area_time = [&](Vertex v) -> int {
        auto it1 = m1.find(v);
        if (it1 == m1.end() || it1->second < 0) return -1;
        auto it2 = m2.find(v);
        if (it2 == m2.end() || it2->second != it1->second) return -1;
        return it1->second;
    };

    if (area_time(c.v) != c.t) return std::nullopt;
    GeneralizedRectangle gr;
    std::vector<Vertex> queue{c.v};
    gr.area.emplace(c.v, c.t);
    for (size_t head = 0; head < queue.size(); head++) {
        auto [nbr, n] = map.neighbors(queue[head]);
        for (int i = 0; i < n; i++) {
            if (gr.area.count(nbr[i])) continue;
            int t = area_time(nbr[i]);
            if (t < 0) continue;
            gr.area.emplace(nbr[i], t);
            queue.push_back(nbr[i]);
        }
    }
    if (gr.area.size() <= 1) return std::nullopt;

    // Entrance edges: MDD edges whose "from" cell is outside the area and
    // whose "to" cell is inside (waits cannot enter: the from-node would give
    // the cell a second timestep).
    auto collect_entrances = [&](const Mdd& mdd, std::vector<GeneralizedRectangle::Entrance>& out) {
        for (int t = 0; t + 1 <= mdd.cost(); t++) {
            for (Vertex v : mdd.layer(t)) {
                if (gr.area.count(v)) continue;
                for (Vertex w : mdd.successors(v, t)) {
                    auto it = gr.area.find(w);
                    if (it != gr.area.end() && it->second == t + 1)
                        out.push_back({{v, t}, {w, t + 1}});
                }
            }
        }
    };
    collect_entrances(mdd1, gr.entrances1);
    collect_entrances(mdd2, gr.entrances2);
    if (gr.entrances1.empty() || gr.entrances2.empty()) return std::nullopt;
    return gr;
}

std::optional<GrBorder> scan_border_and_holes(const GeneralizedRectangle& gr,
                                              const GridMap& map) {
    auto in_area = [&](int x, int y) {
        return map.in_bounds(x, y) && gr.area.count(map.vertex(x, y)) > 0;
    };

    // All boundary edgels, grouped into cycles by the tracing rule.
    std::vector<Edgel> all;
    for (const auto& [v, t] : gr.area) {
        const int x = map.x_of(v), y = map.y_of(v);
        for (int d = 0; d < 4; d++)
            if (!in_area(x + kDx[d], y + kDy[d])) all.push_back({v, d});
    }
    std::sort(all.begin(), all.end(), [](const Edgel& a, const Edgel& b) {
        return a.cell != b.cell ? a.cell < b.cell : a.dir < b.dir;
    });

    auto next_edgel = [&](const Edgel& e) -> Edgel {
        const int x = map.x_of(e.cell), y = map.y_of(e.cell);
        const int a = (e.dir + 1) % 4;  // travel direction along this edge
        const int diag_x = x + kDx[a] + kDx[e.dir], diag_y = y + kDy[a] + kDy[e.dir];
        const int ahead_x = x + kDx[a], ahead_y = y + kDy[a];
        if (in_area(diag_x, diag_y)) return {map.vertex(diag_x, diag_y), (e.dir + 3) % 4};
        if (in_area(ahead_x, ahead_y)) return {map.vertex(ahead_x, ahead_y), e.dir};
        return {e.cell, a};
    };

    std::unordered_map<Edgel, int, EdgelHash> cycle_of;
    std::vector<std::vector<Edgel>> cycles;
    for (const Edgel& start : all) {
        if (cycle_of.count(start)) continue;
        std::vector<Edgel> cycle;
        Edgel e = start;
        do {
            cycle_of[e] = static_cast<int>(cycles.size());
            cycle.push_back(e);
            e = next_edgel(e);
        } while (!(e == start));
        cycles.push_back(std::move(cycle));
    }

    // The outer cycle contains the north face of the top-left area cell.
    Vertex top_left = kNoVertex;
    for (const auto& [v, t] : gr.area) {
        if (top_left == kNoVertex || std::pair(map.y_of(v), map.x_of(v)) <
                                         std::pair(map.y_of(top_left), map.x_of(top_left)))
            top_left = v;
    }
    const int outer = cycle_of.at({top_left, 0});
    const auto& ring = cycles[outer];
    const int L = static_cast<int>(ring.size());

    // R_s / R_g: border cells with the smallest / largest timestep.
    Vertex rs_cell = kNoVertex, rg_cell = kNoVertex;
    for (const Edgel& e : ring) {
        const int t = gr.area.at(e.cell);
        if (rs_cell == kNoVertex || t < gr.area.at(rs_cell) ||
            (t == gr.area.at(rs_cell) && e.cell < rs_cell))
            rs_cell = e.cell;
        if (rg_cell == kNoVertex || t > gr.area.at(rg_cell) ||
            (t == gr.area.at(rg_cell) && e.cell < rg_cell))
            rg_cell = e.cell;
    }
    if (rs_cell == rg_cell) return std::nullopt;

    // Rotate so the first run of R_s edgels starts at index 0; locate the
    // first run of R_g edgels after it.
    int rs_first = -1;
    for (int i = 0; i < L; i++) {
        if (ring[i].cell == rs_cell && ring[(i + L - 1) % L].cell != rs_cell) {
            rs_first = i;
            break;
        }
    }
    if (rs_first < 0) rs_first = 0;  // degenerate: every edgel on rs_cell
    auto at = [&](int i) -> const Edgel& { return ring[(rs_first + i) % L]; };
    int rs_run_end = 0;  // exclusive, in rotated indices
    while (rs_run_end < L && at(rs_run_end).cell == rs_cell) rs_run_end++;
    int rg_start = -1, rg_end = -1;
    for (int i = rs_run_end; i < L; i++) {
        if (at(i).cell == rg_cell) {
            if (rg_start < 0) rg_start = i;
            if (rg_start >= 0 && (i == L - 1 || at(i + 1).cell != rg_cell)) {
                rg_end = i + 1;
                break;
            }
        } else if (rg_start >= 0) {
            break;
        }
    }
    if (rg_start < 0) return std::nullopt;
    if (rg_end < 0) rg_end = rg_start + 1;

    // Side of each entrance: 0 = between R_s and R_g in ring order,
    // 1 = the other arc, -1 = neutral (enters at R_s / R_g itself).
    // distance_to_rg orders entrances along the scan from R_s to R_g.
    struct Placed {
        int side;
        int dist_to_rg;
        SpaceTimeNode to;
        int hole;  // cycle index when not on the outer border, else -1
    };
    auto place = [&](const GeneralizedRectangle::Entrance& en) -> std::optional<Placed> {
        const int fx = map.x_of(en.from.v), fy = map.y_of(en.from.v);
        const int tx = map.x_of(en.to.v), ty = map.y_of(en.to.v);
        int dir = -1;
        for (int d = 0; d < 4; d++)
            if (tx + kDx[d] == fx && ty + kDy[d] == fy) dir = d;
        if (dir < 0) return std::nullopt;
        const Edgel e{en.to.v, dir};
        auto it = cycle_of.find(e);
        if (it == cycle_of.end()) return std::nullopt;
        if (it->second != outer) return Placed{-1, -1, en.to, it->second};
        int idx = -1;
        for (int i = 0; i < L; i++)
            if (at(i) == e) {
                idx = i;
                break;
            }
        if (idx < rs_run_end) return Placed{-1, kInfinity, en.to, -1};
        if (idx >= rg_start && idx < rg_end) return Placed{-1, 0, en.to, -1};
        if (idx < rg_start) return Placed{0, rg_start - idx, en.to, -1};
        return Placed{1, idx - rg_end + 1, en.to, -1};
    };

    std::vector<Placed> placed1, placed2;
    for (const auto& en : gr.entrances1) {
        auto p = place(en);
        if (!p) return std::nullopt;
        placed1.push_back(*p);
    }
    for (const auto& en : gr.entrances2) {
        auto p = place(en);
        if (!p) return std::nullopt;
        placed2.push_back(*p);
    }

    // No hole may admit both agents.
    std::unordered_set<int> holes1, holes2;
    for (const auto& p : placed1)
        if (p.hole >= 0) holes1.insert(p.hole);
    for (const auto& p : placed2)
        if (p.hole >= 0) holes2.insert(p.hole);
    for (int h : holes1)
        if (holes2.count(h)) return std::nullopt;

    // Each agent's outer entrances confined to one side, different per agent.
    auto side_of = [](const std::vector<Placed>& ps) -> std::optional<int> {
        int side = -1;
        for (const auto& p : ps) {
            if (p.hole >= 0 || p.side < 0) continue;
            if (side < 0)
                side = p.side;
            else if (side != p.side)
                return std::nullopt;
        }
        return side;  // -1 when all neutral
    };
    auto side1 = side_of(placed1);
    auto side2 = side_of(placed2);
    if (!side1 || !side2) return std::nullopt;
    if (*side1 >= 0 && *side2 >= 0 && *side1 == *side2) return std::nullopt;
    int s1 = *side1, s2 = *side2;
    if (s1 < 0 && s2 < 0) return std::nullopt;
    if (s1 < 0) s1 = 1 - s2;
    if (s2 < 0) s2 = 1 - s1;

    // Last-seen entrance per agent while scanning R_s -> R_g.
    auto last_seen = [&](const std::vector<Placed>& ps, int side) -> std::optional<Placed> {
        std::optional<Placed> best;
        for (const auto& p : ps) {
            if (p.hole >= 0) continue;
            if (p.side >= 0 && p.side != side) continue;
            if (!best || p.dist_to_rg < best->dist_to_rg) best = p;
        }
        return best;
    };
    auto last1 = last_seen(placed1, s1);
    auto last2 = last_seen(placed2, s2);
    if (!last1 || !last2) return std::nullopt;

    GrBorder border;
    border.rs = {rs_cell, gr.area.at(rs_cell)};
    border.rg = {rg_cell, gr.area.at(rg_cell)};
    border.r2 = last1->to;  // furthest entrance of a1, on a1's side
    border.r1 = last2->to;

    // Barrier of agent 1 runs from R_1 to R_g along agent 2's side; it is the
    // stretch past a2's last entrance. Collect cells by walking the arc.
    auto collect = [&](int side, int from_dist) {
        std::vector<SpaceTimeNode> nodes{{rg_cell, gr.area.at(rg_cell)}};
        std::unordered_set<Vertex> seen{rg_cell};
        if (side == 0) {
            for (int i = rg_start - 1; i >= rs_run_end; i--) {
                if (rg_start - i > from_dist) break;
                if (seen.insert(at(i).cell).second)
                    nodes.push_back({at(i).cell, gr.area.at(at(i).cell)});
            }
        } else {
            for (int i = rg_end; i < L; i++) {
                if (i - rg_end + 1 > from_dist) break;
                if (seen.insert(at(i).cell).second)
                    nodes.push_back({at(i).cell, gr.area.at(at(i).cell)});
            }
        }
        std::sort(nodes.begin(), nodes.end());
        return nodes;
    };
    const int span = L;  // "whole arc" when the last entrance is neutral
    border.barrier1 = collect(s2, last2->dist_to_rg >= kInfinity ? span : last2->dist_to_rg);
    border.barrier2 = collect(s1, last1->dist_to_rg >= kInfinity ? span : last1->dist_to_rg);
    return border;
}

std::optional<RectangleFinding> detect_rectangle_generalized(const Conflict& c,
                                                             ReasoningContext& ctx) {
    auto gr = find_conflicting_area(c, ctx);
    if (!gr) return std::nullopt;
    auto border = scan_border_and_holes(*gr, ctx.instance().map());
    if (!border) return std::nullopt;

    RectangleFinding f;
    f.rs = border->rs;
    f.rg = border->rg;
    f.r1 = border->r1;
    f.r2 = border->r2;
    f.barrier1 = border->barrier1;
    f.barrier2 = border->barrier2;
    for (const auto& n : f.barrier1)
        if (n.t <= 0) return std::nullopt;
    for (const auto& n : f.barrier2)
        if (n.t <= 0) return std::nullopt;
    f.set1.push_back({c.a1, BarrierConstraint{f.barrier1}});
    f.set2.push_back({c.a2, BarrierConstraint{f.barrier2}});
    if (!violates(f.set1.front(), c.a1, ctx.path(c.a1), ctx.instance())) return std::nullopt;
    if (!violates(f.set2.front(), c.a2, ctx.path(c.a2), ctx.instance())) return std::nullopt;

    const bool cut1 = ctx.mdd(c.a1).blocks_all_paths(f.barrier1);
    const bool cut2 = ctx.mdd(c.a2).blocks_all_paths(f.barrier2);
    f.cardinality = cut1 && cut2 ? Cardinality::cardinal
                    : cut1 || cut2 ? Cardinality::semi_cardinal
                                   : Cardinality::non_cardinal;
    return f;
}

}  // namespace sympath
