#pragma once

// Deterministic graphs used across the unit and acceptance suites.  The
// committed files under data/ are produced from these builders by the
// make_fixtures tool; a drift-guard test keeps the two in sync.

#include <cstdint>
#include <numeric>
#include <vector>

#include <tcl/graph.hpp>
#include <tcl/synthetic.hpp>

namespace fixtures {

// ---- tiny closed-form graphs -----------------------------------------------

inline tcl::Graph path3() { return tcl::build_graph({{0, 1}, {1, 2}}); }

inline tcl::Graph triangle() { return tcl::build_graph({{0, 1}, {1, 2}, {0, 2}}); }

inline tcl::Graph four_cycle() { return tcl::build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

inline tcl::Graph triangle_with_pendant() {
    return tcl::build_graph({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

inline tcl::Graph two_triangles() {
    return tcl::build_graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Hub 0 joined to k leaves.
inline tcl::Graph star(std::uint32_t k) {
    std::vector<tcl::Edge> edges;
    for (std::uint32_t leaf = 1; leaf <= k; ++leaf) edges.push_back({0, leaf});
    return tcl::build_graph(std::move(edges));
}

// ---- benchmark-scale fixtures ----------------------------------------------

// Expands (degree, count) runs into a per-node degree list and fixes parity
// by bumping the last node, so the stub count is even.
inline std::vector<std::uint32_t> expand_degree_runs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& runs,
    const std::vector<std::uint32_t>& tail = {}) {
    std::vector<std::uint32_t> degrees;
    for (const auto& [degree, count] : runs) degrees.insert(degrees.end(), count, degree);
    degrees.insert(degrees.end(), tail.begin(), tail.end());
    const std::uint64_t total = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    if (total % 2 != 0) ++degrees.back();
    return degrees;
}

// 1,000 nodes, heavy bulk of low degrees plus a gapped high-degree tail
// (nothing between degree 8 and 23), so "degree >= 10" cleanly selects the
// tail.  The workhorse fixture for fit/generate accuracy checks.
inline std::vector<std::uint32_t> fixture_1000_degrees() {
    return expand_degree_runs(
        {{2, 376}, {3, 240}, {4, 150}, {5, 95}, {6, 60}, {7, 40}, {8, 25}},
        {23, 24, 26, 28, 30, 32, 35, 38, 41, 44, 48, 52, 56, 60});
}

inline tcl::Graph fixture_1000() { return tcl::configuration_graph(fixture_1000_degrees(), 1000); }

// 500 nodes, similar shape at half scale; used for walk-distribution checks.
inline std::vector<std::uint32_t> fixture_500_degrees() {
    return expand_degree_runs(
        {{2, 200}, {3, 120}, {4, 75}, {5, 45}, {6, 25}, {7, 15}, {8, 10}},
        {12, 14, 17, 20, 23, 26, 30, 34, 38, 43});
}

inline tcl::Graph fixture_500() { return tcl::configuration_graph(fixture_500_degrees(), 500); }

// 300 nodes with a smooth skewed tail; used for fast-vs-reference edge
// probability comparisons, so the degree ceiling stays well under sqrt(2M).
inline std::vector<std::uint32_t> skew_300_degrees() {
    return expand_degree_runs({{2, 118},
                               {3, 62},
                               {4, 40},
                               {5, 26},
                               {6, 16},
                               {7, 11},
                               {8, 8},
                               {9, 6},
                               {10, 4},
                               {11, 2},
                               {12, 2},
                               {13, 1},
                               {14, 1},
                               {15, 1},
                               {16, 1},
                               {18, 1}});
}

inline tcl::Graph skew_300() { return tcl::configuration_graph(skew_300_degrees(), 300); }

// Ring of 200 nodes plus hub 200 wired to every fourth ring node: N = 201,
// M = 250, hub degree exactly 50, so the hub soaks up 10% of the stationary
// mass.  Exercises the collision-queue correction, whose absence visibly
// deflates the hub's generated degree.
inline tcl::Graph hub_201() {
    std::vector<tcl::Edge> edges;
    for (tcl::node_id i = 0; i < 200; ++i) edges.push_back({i, static_cast<tcl::node_id>((i + 1) % 200)});
    for (tcl::node_id i = 0; i < 200; i += 4) edges.push_back({200, i});
    return tcl::build_graph(std::move(edges));
}

} // namespace fixtures
