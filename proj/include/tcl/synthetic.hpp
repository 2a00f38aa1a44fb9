#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace tcl {

// Configuration-style construction: every node contributes one stub per unit
// of target degree, the stubs are shuffled and paired off, and pairs that
// would form a self-loop or duplicate an existing edge are discarded.
// Realized degrees therefore track the targets closely but not exactly.
// Useful for growing test graphs with a prescribed degree shape.
inline Graph configuration_graph(const std::vector<std::uint32_t>& target_degrees,
                                 std::uint64_t seed) {
    std::vector<node_id> stubs;
    for (node_id v = 0; v < target_degrees.size(); ++v)
        stubs.insert(stubs.end(), target_degrees[v], v);

    rng_t rng = make_rng(seed, "configuration");
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[uniform_index(rng, i)]);

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
        if (stubs[i] != stubs[i + 1]) edges.emplace_back(stubs[i], stubs[i + 1]);

    return build_graph(std::move(edges), target_degrees.size());
}

//`copies` disjoint replicas of a graph side by side: copy c maps node v to
// c*N + v.  Scales edge-count workloads without changing the degree mix,
// which is what the timing benchmark needs.
inline Graph disjoint_copies(const Graph& g, std::size_t copies) {
    const node_id n = static_cast<node_id>(g.node_count());
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * copies);
    for (std::size_t c = 0; c < copies; ++c) {
        const node_id base = static_cast<node_id>(c * n);
        g.for_each_edge([&](node_id a, node_id b) {
            edges.emplace_back(base + a, base + b);
        });
    }
    return build_graph(std::move(edges), static_cast<std::size_t>(n) * copies);
}

} // namespace tcl
