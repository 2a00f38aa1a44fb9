#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace tcl {

// Draws nodes proportionally to degree (the stationary distribution of a
// random walk).  Node v occupies degree(v) slots of a flat array of length
// 2M, so a draw is one uniform index — O(1) regardless of the degree shape.
class PiSampler {
public:
    explicit PiSampler(const Graph& g) {
        slots_.reserve(g.edge_count() * 2);
        const node_id n = static_cast<node_id>(g.node_count());
        for (node_id v = 0; v < n; ++v)
            slots_.insert(slots_.end(), g.degree(v), v);
    }

    // Number of slots (2M).
    std::size_t size() const noexcept { return slots_.size(); }

    template <class URBG>
    node_id operator()(URBG& rng) const {
        if (slots_.empty()) throw empty_graph_error("degree-weighted draw from a graph with no edges");
        return slots_[uniform_index(rng, slots_.size())];
    }

private:
    std::vector<node_id> slots_;
};

// Degree-weighted node draw.
template <class URBG>
node_id pi_sample(const PiSampler& pi, URBG& rng) {
    return pi(rng);
}

// Uniform draw among the neighbors of v.
template <class URBG>
node_id uniform_neighbor(const Graph& g, node_id v, URBG& rng) {
    const auto row = g.neighbors(v);
    if (row.empty()) throw isolated_node_error("neighbor draw from a degree-zero node");
    return row[uniform_index(rng, row.size())];
}

// Uniform draw over the 2M (node, incident edge) slots: pick the first
// endpoint by degree, then one of its neighbors uniformly.  Every edge comes
// up with probability 1/M; the returned pair keeps the walk orientation
// (first = degree-weighted start, second = the neighbor).
template <class URBG>
Edge uniform_edge(const Graph& g, const PiSampler& pi, URBG& rng) {
    const node_id start = pi(rng);
    return {start, uniform_neighbor(g, start, rng)};
}

} // namespace tcl
