#include <doctest.h>

#include <random>

#include "sympath/heuristics.hpp"

using namespace sympath;

TEST_CASE("minimum vertex cover on small graphs") {
    CHECK(min_vertex_cover(3, {}) == 0);
    std::vector<std::pair<int, int>> one_edge{{0, 1}};
    CHECK(min_vertex_cover(2, one_edge) == 1);
    std::vector<std::pair<int, int>> triangle{{0, 1}, {1, 2}, {0, 2}};
    CHECK(min_vertex_cover(3, triangle) == 2);
    std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(min_vertex_cover(4, star) == 1);
    std::vector<std::pair<int, int>> path4{{0, 1}, {1, 2}, {2, 3}};
    CHECK(min_vertex_cover(4, path4) == 2);
}

TEST_CASE("edge-weighted MVC handles disjoint edges and overlapping demands") {
    CHECK(edge_weighted_mvc(4, {}) == 0);
    std::vector<std::tuple<int, int, int>> disjoint{{0, 1, 1}, {2, 3, 2}};
    CHECK(edge_weighted_mvc(4, disjoint) == 3);
    std::vector<std::tuple<int, int, int>> shared{{0, 1, 5}, {0, 2, 2}, {1, 3, 3}};
    // x0=2, x1=3, x3=0 covers everything: total 5.
    CHECK(edge_weighted_mvc(4, shared) == 5);
    std::vector<std::tuple<int, int, int>> triangle{{0, 1, 2}, {1, 2, 2}, {0, 2, 2}};
    CHECK(edge_weighted_mvc(3, triangle) == 3);
}

TEST_CASE("edge-weighted MVC with unit weights matches plain MVC") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 50; trial++) {
        const int n = 2 + rng() % 6;
        std::vector<std::pair<int, int>> edges;
        std::vector<std::tuple<int, int, int>> weighted;
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                if (rng() % 3 == 0) {
                    edges.push_back({u, v});
                    weighted.push_back({u, v, 1});
                }
            }
        }
        CHECK(min_vertex_cover(n, edges) == edge_weighted_mvc(n, weighted));
    }
}

TEST_CASE("edge-weighted MVC matches brute force on random weighted graphs") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 30; trial++) {
        const int n = 2 + rng() % 4;
        std::vector<std::tuple<int, int, int>> edges;
        int max_w = 0;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng() % 2 == 0) {
                    int w = 1 + rng() % 4;
                    edges.push_back({u, v, w});
                    max_w = std::max(max_w, w);
                }
        // Brute force over all assignments up to max incident weight.
        int best = 1 << 20;
        std::vector<int> x(n, 0);
        auto rec = [&](auto&& self, int i, int sum) -> void {
            if (sum >= best) return;
            if (i == n) {
                for (auto [u, v, w] : edges)
                    if (x[u] + x[v] < w) return;
                best = sum;
                return;
            }
            for (int value = 0; value <= max_w; value++) {
                x[i] = value;
                self(self, i + 1, sum + value);
            }
            x[i] = 0;
        };
        rec(rec, 0, 0);
        CHECK(edge_weighted_mvc(n, edges) == best);
    }
}
