#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace tcl {

// Knobs shared by the generators.  Fields a given generator does not use are
// ignored by it.
struct GenParams {
    // Probability that a replacement edge closes a two-hop path instead of
    // landing degree-weighted.  Only the transitive generator reads it.
    double rho = 0.0;
    // Number of successful edge replacements; 0 means "one per edge" (M),
    // which is enough to retire every warmup edge.
    std::uint64_t iterations = 0;
    // Abort threshold for candidate draws; 0 picks 100 * max(M, iterations).
    // Hitting it raises graph_too_dense_error instead of spinning forever.
    std::uint64_t max_attempts = 0;
};

// Counters describing one generator run.  attempts - collisions equals the
// number of successful insertions.
struct GenMetrics {
    std::uint64_t attempts = 0;   // candidate pairs examined
    std::uint64_t collisions = 0; // rejected: self-loop or already present
    std::uint64_t fallbacks = 0;  // transitive draws rerouted because the
                                  // start node had no neighbors left

    std::uint64_t insertions() const noexcept { return attempts - collisions; }
};

// FIFO of nodes that are still owed an edge endpoint after a collision.
// Draining oldest-first is what keeps the realized degrees on target.
class CollisionQueue {
public:
    bool empty() const noexcept { return nodes_.empty(); }
    std::size_t size() const noexcept { return nodes_.size(); }
    void push(node_id v) { nodes_.push_back(v); }

    node_id pop() {
        const node_id v = nodes_.front();
        nodes_.pop_front();
        return v;
    }

private:
    std::deque<node_id> nodes_;
};

// Mutable edge set ordered by insertion age, with per-node adjacency.
// Supports the operations the replacement loop needs at O(1): membership
// test, insert-newest, evict-oldest — plus uniform neighbor draws against
// the *current* edges.
class AgedEdgeList {
public:
    explicit AgedEdgeList(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return by_age_.size(); }
    std::uint32_t degree(node_id v) const { return static_cast<std::uint32_t>(adjacency_[v].size()); }
    bool contains(node_id a, node_id b) const { return members_.count(edge_key(a, b)) != 0; }

    // Oldest first.
    const std::deque<Edge>& edges_by_age() const noexcept { return by_age_; }

    void insert(node_id a, node_id b) {
        assert(a != b && !contains(a, b));
        by_age_.emplace_back(a, b);
        members_.insert(edge_key(a, b));
        adjacency_[a].insert(b);
        adjacency_[b].insert(a);
    }

    Edge evict_oldest() {
        const Edge e = by_age_.front();
        by_age_.pop_front();
        members_.erase(edge_key(e.first, e.second));
        adjacency_[e.first].erase(e.second);
        adjacency_[e.second].erase(e.first);
        return e;
    }

    template <class URBG>
    node_id uniform_neighbor(node_id v, URBG& rng) const {
        const auto& row = adjacency_[v];
        if (row.empty()) throw isolated_node_error("neighbor draw from a degree-zero node");
        auto it = row.begin();
        std::advance(it, uniform_index(rng, row.size()));
        return *it;
    }

    Graph to_graph() const {
        return build_graph(std::vector<Edge>(by_age_.begin(), by_age_.end()), adjacency_.size());
    }

private:
    std::deque<Edge> by_age_;
    std::unordered_set<std::uint64_t> members_;
    std::vector<std::unordered_set<node_id>> adjacency_;
};

// Two random-walk steps from `start` over the current working edges; the
// landing spot is exactly two hops out, which is what makes an accepted
// candidate close a triangle.
template <class URBG>
node_id two_hop_walk(const AgedEdgeList& work, node_id start, URBG& rng) {
    const node_id mid = work.uniform_neighbor(start, rng);
    return work.uniform_neighbor(mid, rng);
}

namespace detail {

inline std::uint64_t attempt_budget(const GenParams& params, std::uint64_t edge_target) {
    if (params.max_attempts != 0) return params.max_attempts;
    std::uint64_t span = edge_target;
    if (params.iterations > span) span = params.iterations;
    if (span == 0) span = 1;
    return 100 * span;
}

// Degree-weighted edge placement, in insertion order.  Draws endpoint pairs
// from the degree distribution until `count` distinct non-loop edges exist.
// With `corrected` set, each rejected candidate parks both endpoints on the
// collision queue and the next second-endpoint comes from that queue, so
// mass lost to collisions is re-spent on the same nodes; without it the
// rejected pair is simply redrawn, which starves the heavy nodes.
template <class URBG>
std::vector<Edge> place_weighted_edges(const PiSampler& pi, std::size_t count,
                                       const GenParams& params, URBG& rng, bool corrected,
                                       GenMetrics& metrics) {
    std::vector<Edge> placed;
    placed.reserve(count);
    std::unordered_set<std::uint64_t> present;
    present.reserve(count * 2);
    CollisionQueue owed;
    const std::uint64_t budget = attempt_budget(params, count);

    while (placed.size() < count) {
        if (++metrics.attempts > budget)
            throw graph_too_dense_error("edge placement exceeded its retry budget; "
                                        "the degree sequence is too concentrated");
        const node_id b = (corrected && !owed.empty()) ? owed.pop() : pi_sample(pi, rng);
        const node_id a = pi_sample(pi, rng);
        if (a != b && present.insert(edge_key(a, b)).second) {
            placed.emplace_back(a < b ? a : b, a < b ? b : a);
        } else {
            ++metrics.collisions;
            if (corrected) {
                owed.push(a);
                owed.push(b);
            }
        }
    }
    return placed;
}

// Replacement phase of the transitive generator: runs until `replacements`
// insertions have landed, evicting the globally oldest edge after each one
// so the edge count is invariant.  Collisions enqueue both endpoints and
// evict nothing.
template <class URBG>
void replace_edges(const PiSampler& pi, AgedEdgeList& work, const GenParams& params,
                   std::uint64_t replacements, URBG& rng, GenMetrics& metrics) {
    CollisionQueue owed; // starts fresh; warmup debts do not carry over
    const std::uint64_t budget = attempt_budget(params, work.size());
    const std::size_t m = work.size();
    std::uint64_t done = 0;

    while (done < replacements) {
        if (++metrics.attempts > budget)
            throw graph_too_dense_error("edge replacement exceeded its retry budget; "
                                        "the degree sequence is too concentrated");
        const node_id b = owed.empty() ? pi_sample(pi, rng) : owed.pop();
        node_id a;
        if (bernoulli(rng, params.rho)) {
            if (work.degree(b) == 0) {
                // The start lost its last edge to an eviction; no walk exists.
                ++metrics.fallbacks;
                a = pi_sample(pi, rng);
            } else {
                a = two_hop_walk(work, b, rng);
            }
        } else {
            a = pi_sample(pi, rng);
        }

        if (a != b && !work.contains(a, b)) {
            work.insert(a, b);
            work.evict_oldest();
            ++done;
            assert(work.size() == m);
        } else {
            ++metrics.collisions;
            owed.push(a);
            owed.push(b);
        }
    }
    (void)m;
}

} // namespace detail

// Reference generator: visits every pair of positive-degree nodes once and
// keeps it with probability min(1, d_a * d_b / 2M).  Quadratic in the node
// count — meant for small graphs and as an oracle for the fast generator.
// `clamped_pairs`, when given, receives the number of pairs whose weight
// product hit the probability ceiling.
template <class URBG>
Graph generate_cl_slow(const Graph& g, URBG& rng, std::uint64_t* clamped_pairs = nullptr) {
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    std::uint64_t clamped = 0;
    std::vector<Edge> kept;

    if (g.edge_count() > 0) {
        std::vector<node_id> active;
        const node_id n = static_cast<node_id>(g.node_count());
        for (node_id v = 0; v < n; ++v)
            if (g.degree(v) > 0) active.push_back(v);

        for (std::size_t i = 0; i < active.size(); ++i) {
            const double da = g.degree(active[i]);
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                const double p = da * g.degree(active[j]) / two_m;
                if (p >= 1.0) {
                    // Deterministically present; no randomness consumed.
                    ++clamped;
                    kept.emplace_back(active[i], active[j]);
                } else if (uniform_real01(rng) < p) {
                    kept.emplace_back(active[i], active[j]);
                }
            }
        }
    }
    if (clamped_pairs) *clamped_pairs = clamped;
    return build_graph(std::move(kept), g.node_count());
}

// Fast degree-weighted generator: places exactly M edges by repeated
// two-endpoint draws, linear in M.  `corrected` selects collision-queue
// repair (the default) versus plain redraws.
template <class URBG>
Graph generate_cl_fast(const Graph& g, const GenParams& params, URBG& rng,
                       bool corrected = true, GenMetrics* metrics = nullptr) {
    GenMetrics local;
    const PiSampler pi(g);
    auto edges = detail::place_weighted_edges(pi, g.edge_count(), params, rng, corrected, local);
    if (metrics) *metrics = local;
    return build_graph(std::move(edges), g.node_count());
}

// Seed convenience: the fast generator consumes the "warmup" stream.
inline Graph generate_cl_fast(const Graph& g, const GenParams& params, std::uint64_t seed,
                              bool corrected = true, GenMetrics* metrics = nullptr) {
    rng_t rng = make_rng(seed, "warmup");
    return generate_cl_fast(g, params, rng, corrected, metrics);
}

// Transitive generator.  Warmup: corrected degree-weighted placement of M
// edges.  Replacement: with probability rho the new endpoint comes from a
// two-hop walk off the current graph (closing a triangle), otherwise from
// the degree distribution; every successful insertion evicts the globally
// oldest edge, so the edge count stays at M while the warmup edges are
// progressively retired.  This overload consumes one caller-supplied stream
// for both phases.
template <class URBG>
Graph generate_tcl(const Graph& g, const GenParams& params, URBG& rng,
                   GenMetrics* metrics = nullptr) {
    if (!(params.rho >= 0.0 && params.rho <= 1.0))
        throw std::invalid_argument("rho must lie in [0, 1]");

    const std::size_t m = g.edge_count();
    GenMetrics local;
    const PiSampler pi(g);

    AgedEdgeList work(g.node_count());
    for (const Edge& e : detail::place_weighted_edges(pi, m, params, rng, /*corrected=*/true, local))
        work.insert(e.first, e.second);

    detail::replace_edges(pi, work, params, params.iterations != 0 ? params.iterations : m, rng,
                          local);

    if (metrics) *metrics = local;
    return work.to_graph();
}

// Seed convenience: warmup and replacement each get their own stream derived
// from the master seed, so changing the iteration count cannot shift the
// warmup draws.
inline Graph generate_tcl(const Graph& g, const GenParams& params, std::uint64_t seed,
                          GenMetrics* metrics = nullptr) {
    if (!(params.rho >= 0.0 && params.rho <= 1.0))
        throw std::invalid_argument("rho must lie in [0, 1]");

    const std::size_t m = g.edge_count();
    GenMetrics local;
    const PiSampler pi(g);

    rng_t warmup_rng = make_rng(seed, "warmup");
    AgedEdgeList work(g.node_count());
    for (const Edge& e :
         detail::place_weighted_edges(pi, m, params, warmup_rng, /*corrected=*/true, local))
        work.insert(e.first, e.second);

    rng_t replace_rng = make_rng(seed, "replacement");
    detail::replace_edges(pi, work, params, params.iterations != 0 ? params.iterations : m,
                          replace_rng, local);

    if (metrics) *metrics = local;
    return work.to_graph();
}

} // namespace tcl
