#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tcl {

// Node ids are dense indices 0..N-1.  32 bits comfortably covers the target
// scale (millions of edges) while halving adjacency storage.
using node_id = std::uint32_t;

// An undirected edge.  Orientation of the pair is not significant unless a
// function documents otherwise.
using Edge = std::pair<node_id, node_id>;

// Order-free 64-bit key for an undirected pair; used by hash-set edge lookups.
constexpr std::uint64_t edge_key(node_id a, node_id b) noexcept {
    const node_id lo = a < b ? a : b;
    const node_id hi = a < b ? b : a;
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

// Immutable undirected graph in compressed sparse row form: one offsets array
// and one flat, per-node-sorted neighbor array.  Neighbor access is O(1),
// edge membership is a binary search, and the whole structure is two
// contiguous allocations.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::uint32_t degree(node_id v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    // Neighbors of v in ascending id order.
    std::span<const node_id> neighbors(node_id v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    bool has_edge(node_id a, node_id b) const {
        const auto row = neighbors(a);
        return std::binary_search(row.begin(), row.end(), b);
    }

    // Visits every edge once as an (a, b) pair with a < b.
    template <class Visitor>
    void for_each_edge(Visitor&& visit) const {
        const node_id n = static_cast<node_id>(node_count());
        for (node_id a = 0; a < n; ++a)
            for (node_id b : neighbors(a))
                if (a < b) visit(a, b);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for_each_edge([&](node_id a, node_id b) { out.emplace_back(a, b); });
        return out;
    }

    friend Graph build_graph(std::vector<Edge> edges, std::size_t node_count);

private:
    std::vector<std::uint64_t> offsets_; // N + 1 entries
    std::vector<node_id> targets_;       // 2M entries, sorted within each row
};

// Builds a simple undirected graph from an arbitrary edge list: self-loops
// are dropped, duplicates (in either orientation) collapse to one edge, and
// the node set is 0..N-1 where N = max mentioned id + 1.  Pass node_count to
// widen the node set beyond the largest id that appears in an edge, e.g. to
// keep trailing isolated nodes.
inline Graph build_graph(std::vector<Edge> edges, std::size_t node_count = 0) {
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    for (Edge& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::size_t n = node_count;
    for (const Edge& e : edges) n = std::max(n, static_cast<std::size_t>(e.second) + 1);

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : edges) {
        ++g.offsets_[e.first + 1];
        ++g.offsets_[e.second + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.targets_.resize(edges.size() * 2);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        g.targets_[cursor[e.first]++] = e.second;
        g.targets_[cursor[e.second]++] = e.first;
    }
    // Sorted input edges fill each row in ascending order for the first
    // endpoint but not the second, so sort rows explicitly.
    for (std::size_t v = 0; v < n; ++v)
        std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

} // namespace tcl
