#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace tcl {

// Settings for the EM fit of the transitive-closure probability.
struct EmConfig {
    std::uint64_t samples_per_iteration = 10000; // edges drawn fresh each round
    std::uint64_t max_iterations = 100;
    double tolerance = 1e-3; // convergence threshold, see fit_rho
    std::uint64_t burn_in = 3; // rounds ignored before the running mean starts
    double rho_init = 0.5;
};

// Posterior weight assigned by the expectation step to one sampled edge.
struct EdgeResponsibility {
    Edge edge;    // (start, neighbor) orientation of the sampled walk
    double value; // probability the edge was placed transitively
};

struct EmIteration {
    std::uint64_t iteration; // 1-based
    double rho;              // estimate after this round's maximization step
    double seconds;          // wall time of the round
};

struct EmTrace {
    double rho_final = 0.0;
    bool converged = false;
    std::vector<EmIteration> iterations;
};

// Expectation step for one edge under the current estimate.  The edge is
// oriented: `e.first` is the walk start (degree-weighted draw), `e.second`
// the endpoint whose placement is being explained.  Competing explanations:
//   transitive: two hops from the start through a shared neighbor,
//               rho * (1/d_start) * sum over shared k of 1/d_k
//   weighted:   a fresh degree-proportional draw, (1-rho) * d_end / 2M
// Returns the posterior of the transitive branch.  Throws not_an_edge_error
// if the pair is not actually connected.
inline EdgeResponsibility e_step(const Graph& g, Edge e, double rho) {
    const auto [start, end] = e;
    if (!g.has_edge(start, end)) throw not_an_edge_error("responsibility of a non-edge requested");

    // Walk the smaller adjacency, membership-test against the larger.
    auto small = g.neighbors(start);
    auto large = g.neighbors(end);
    if (small.size() > large.size()) std::swap(small, large);
    double shared_mass = 0.0;
    for (node_id k : small)
        if (std::binary_search(large.begin(), large.end(), k)) shared_mass += 1.0 / g.degree(k);

    const double transitive = rho * shared_mass / g.degree(start);
    const double weighted =
        (1.0 - rho) * g.degree(end) / (2.0 * static_cast<double>(g.edge_count()));
    const double total = transitive + weighted;
    return {e, total > 0.0 ? transitive / total : 0.0};
}

// Maximization step: the new estimate is the mean posterior.
inline double m_step(std::span<const double> responsibilities) {
    if (responsibilities.empty())
        throw empty_sample_error("maximization step over an empty sample");
    double sum = 0.0;
    for (double z : responsibilities) sum += z;
    return sum / static_cast<double>(responsibilities.size());
}

// Fits the transitive-closure probability by sampled EM: each round draws a
// fresh batch of edges, computes their posteriors, and replaces the estimate
// with their mean.  Because every round resamples, the raw sequence hovers
// around the fixed point instead of settling on it, so convergence is judged
// on the running mean of the post-burn-in estimates: once that mean moves
// less than `tolerance` three rounds in a row, the fit stops and reports the
// mean as the final value.  Throws empty_graph_error when there are no edges
// to sample.
template <class URBG>
EmTrace fit_rho(const Graph& g, const EmConfig& cfg, URBG& rng) {
    if (g.edge_count() == 0) throw empty_graph_error("cannot fit on a graph with no edges");

    const PiSampler pi(g);
    EmTrace trace;
    std::vector<double> batch(cfg.samples_per_iteration);
    double rho = cfg.rho_init;
    double tail_sum = 0.0;
    std::uint64_t tail_count = 0;
    double previous_mean = 0.0;
    int stable_rounds = 0;

    for (std::uint64_t round = 1; round <= cfg.max_iterations; ++round) {
        const auto started = std::chrono::steady_clock::now();
        for (double& z : batch) z = e_step(g, uniform_edge(g, pi, rng), rho).value;
        rho = m_step(batch);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        trace.iterations.push_back({round, rho, seconds});

        if (round <= cfg.burn_in) continue;
        tail_sum += rho;
        ++tail_count;
        const double mean = tail_sum / static_cast<double>(tail_count);
        if (tail_count > 1 && std::abs(mean - previous_mean) < cfg.tolerance) {
            if (++stable_rounds >= 3) {
                trace.converged = true;
                trace.rho_final = mean;
                return trace;
            }
        } else {
            stable_rounds = 0;
        }
        previous_mean = mean;
    }

    trace.rho_final = tail_count > 0 ? tail_sum / static_cast<double>(tail_count) : rho;
    return trace;
}

// Seed convenience: the fit consumes the "fit" stream.
inline EmTrace fit_rho(const Graph& g, const EmConfig& cfg, std::uint64_t seed) {
    rng_t rng = make_rng(seed, "fit");
    return fit_rho(g, cfg, rng);
}

} // namespace tcl
