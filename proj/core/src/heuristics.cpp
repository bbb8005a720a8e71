#include "sympath/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sympath {

namespace {

void mvc_branch(std::vector<std::pair<int, int>>& edges, std::vector<char>& in_cover, int taken,
                int& best) {
    if (taken >= best) return;
    // First uncovered edge.
    const std::pair<int, int>* pick = nullptr;
    for (const auto& e : edges) {
        if (!in_cover[e.first] && !in_cover[e.second]) {
            pick = &e;
            break;
        }
    }
    if (pick == nullptr) {
        best = taken;
        return;
    }
    auto [u, v] = *pick;
    in_cover[u] = 1;
    mvc_branch(edges, in_cover, taken + 1, best);
    in_cover[u] = 0;
    in_cover[v] = 1;
    mvc_branch(edges, in_cover, taken + 1, best);
    in_cover[v] = 0;
}

struct Component {
    std::vector<int> vertices;                       // original ids, assignment order
    std::vector<std::tuple<int, int, int>> edges;    // indices into `vertices`
    std::vector<int> ub;                             // max incident weight per vertex
};

// Exhaustive assignment of x values vertex by vertex. Each x_i must cover all
// edges to already-assigned vertices; values above ub[i] are dominated.
void wmvc_assign(const Component& comp, std::vector<int>& x, size_t i, int sum, int& best) {
    if (sum >= best) return;
    if (i == comp.vertices.size()) {
        best = sum;
        return;
    }
    int lo = 0;
    for (const auto& [a, b, w] : comp.edges) {
        if (static_cast<size_t>(std::max(a, b)) != i) continue;
        const int other = std::min(a, b);
        lo = std::max(lo, w - x[other]);
    }
    for (int value = lo; value <= comp.ub[i]; value++) {
        x[i] = value;
        wmvc_assign(comp, x, i + 1, sum + value, best);
    }
    x[i] = 0;
}

}  // namespace

int min_vertex_cover(int n, std::span<const std::pair<int, int>> edges) {
    if (edges.empty()) return 0;
    std::vector<std::pair<int, int>> es(edges.begin(), edges.end());
    std::vector<char> in_cover(n, 0);
    int best = n;
    mvc_branch(es, in_cover, 0, best);
    return best;
}

int edge_weighted_mvc(int n, std::span<const std::tuple<int, int, int>> edges) {
    std::vector<std::tuple<int, int, int>> positive;
    for (const auto& e : edges)
        if (std::get<2>(e) > 0) positive.push_back(e);
    if (positive.empty()) return 0;

    // Split into connected components; solve each independently.
    std::vector<int> comp_id(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < positive.size(); i++) {
        adj[std::get<0>(positive[i])].push_back(static_cast<int>(i));
        adj[std::get<1>(positive[i])].push_back(static_cast<int>(i));
    }
    int total = 0;
    for (int v0 = 0; v0 < n; v0++) {
        if (comp_id[v0] >= 0 || adj[v0].empty()) continue;
        Component comp;
        std::vector<int> stack{v0};
        comp_id[v0] = v0;
        std::vector<char> edge_seen(positive.size(), 0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (int ei : adj[v]) {
                if (edge_seen[ei]) continue;
                edge_seen[ei] = 1;
                auto [a, b, w] = positive[ei];
                comp.edges.push_back({a, b, w});
                for (int other : {a, b}) {
                    if (comp_id[other] < 0) {
                        comp_id[other] = v0;
                        stack.push_back(other);
                    }
                }
            }
        }
        std::unordered_map<int, int> local;
        for (size_t i = 0; i < comp.vertices.size(); i++) local[comp.vertices[i]] = static_cast<int>(i);
        comp.ub.assign(comp.vertices.size(), 0);
        for (auto& [a, b, w] : comp.edges) {
            a = local[a];
            b = local[b];
            comp.ub[a] = std::max(comp.ub[a], w);
            comp.ub[b] = std::max(comp.ub[b], w);
        }
        int best = std::accumulate(comp.edges.begin(), comp.edges.end(), 0,
                                   [](int s, const auto& e) { return s + std::get<2>(e); }) +
                   1;
        std::vector<int> x(comp.vertices.size(), 0);
        wmvc_assign(comp, x, 0, 0, best);
        total += best;
    }
    return total;
}

}  // namespace sympath
