#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace tcl {

// One point of a complementary CDF: the fraction of the population whose
// value is strictly greater than x.
struct CcdfPoint {
    double x;
    double fraction;
};

// Complementary CDF over a population of per-node values.  The grid is 0
// plus every observed value, ascending, so the final fraction is always 0.
struct CcdfSeries {
    std::vector<CcdfPoint> points;
    std::uint64_t population = 0; // nodes the fractions are measured against
};

namespace detail {

inline CcdfSeries ccdf_from_values(std::vector<double> values) {
    CcdfSeries series;
    series.population = values.size();
    std::sort(values.begin(), values.end());

    // Grid: 0 plus the distinct observed values, ascending.
    std::vector<double> grid{0.0};
    for (double v : values)
        if (v > grid.back()) grid.push_back(v);

    const double n = static_cast<double>(values.size());
    for (double x : grid) {
        // Count of values strictly greater than x.
        const auto above = values.end() - std::upper_bound(values.begin(), values.end(), x);
        series.points.push_back({x, static_cast<double>(above) / n});
    }
    return series;
}

} // namespace detail

// Degree distribution as a complementary CDF over all nodes.
inline CcdfSeries degree_ccdf(const Graph& g) {
    if (g.node_count() == 0) throw empty_graph_error("degree distribution of an empty graph");
    std::vector<double> degrees(g.node_count());
    for (node_id v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
    return detail::ccdf_from_values(std::move(degrees));
}

// Number of edges among the neighbors of v, i.e. triangles through v.
inline std::uint64_t triangles_at(const Graph& g, node_id v) {
    std::uint64_t closed = 0;
    for (node_id u : g.neighbors(v)) {
        // Count shared neighbors u' > u once per unordered pair.
        auto small = g.neighbors(v);
        auto large = g.neighbors(u);
        if (small.size() > large.size()) std::swap(small, large);
        for (node_id w : small)
            if (w > u && std::binary_search(large.begin(), large.end(), w)) ++closed;
    }
    return closed;
}

// Fraction of realized links among the deg*(deg-1)/2 possible neighbor
// pairs; 0 for nodes with fewer than two neighbors.
inline double local_clustering(const Graph& g, node_id v) {
    const double d = g.degree(v);
    if (d < 2.0) return 0.0;
    return 2.0 * static_cast<double>(triangles_at(g, v)) / (d * (d - 1.0));
}

struct ClusteringOptions {
    // When set, nodes of degree 0 and 1 join the population with coefficient
    // 0 instead of being excluded.
    bool include_low_degree = false;
};

// Local clustering coefficients as a complementary CDF.  By default the
// population is the nodes with at least two neighbors — the only ones for
// which the coefficient is informative.
inline CcdfSeries clustering_ccdf(const Graph& g, const ClusteringOptions& opt = {}) {
    if (g.node_count() == 0) throw empty_graph_error("clustering distribution of an empty graph");
    std::vector<double> coefficients;
    for (node_id v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) >= 2)
            coefficients.push_back(local_clustering(g, v));
        else if (opt.include_low_degree)
            coefficients.push_back(0.0);
    }
    if (coefficients.empty())
        throw empty_sample_error("no nodes qualify for the clustering distribution");
    return detail::ccdf_from_values(std::move(coefficients));
}

// Closed-triple ratio: 3 * triangles / connected triples.  Throws
// no_triples_error when no node has two neighbors.
inline double global_clustering(const Graph& g) {
    std::uint64_t closed = 0; // sums to 3 * triangle count
    std::uint64_t triples = 0;
    for (node_id v = 0; v < g.node_count(); ++v) {
        const std::uint64_t d = g.degree(v);
        if (d < 2) continue;
        triples += d * (d - 1) / 2;
        closed += triangles_at(g, v);
    }
    if (triples == 0) throw no_triples_error("no connected triples; global clustering undefined");
    return static_cast<double>(closed) / static_cast<double>(triples);
}

// Cumulative fraction of reachable ordered node pairs by hop distance.
struct HopPlot {
    std::vector<std::pair<std::uint32_t, double>> points; // (h, fraction at distance <= h)
    std::uint64_t sources_used = 0;
    bool exact = true;             // every node served as a source
    std::uint64_t finite_pairs = 0; // ordered (source, target) pairs reached
};

namespace detail {

inline void bfs_distances(const Graph& g, node_id source, std::vector<std::uint32_t>& distance,
                          std::vector<node_id>& frontier) {
    distance.assign(g.node_count(), ~std::uint32_t{0});
    frontier.clear();
    frontier.push_back(source);
    distance[source] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const node_id v = frontier[head];
        const std::uint32_t next = distance[v] + 1;
        for (node_id u : g.neighbors(v)) {
            if (distance[u] != ~std::uint32_t{0}) continue;
            distance[u] = next;
            frontier.push_back(u);
        }
    }
}

} // namespace detail

// Hop plot: for each distance h, the fraction of ordered reachable pairs
// (self-pairs excluded) whose shortest path is at most h.  Runs one BFS per
// source.  sources == 0 selects the default policy: every node when the
// graph has at most 10,000 nodes, otherwise 1,000 sources sampled without
// replacement.  An explicit source count is capped at the node count, and
// covering every node marks the plot exact.
template <class URBG>
HopPlot hop_plot(const Graph& g, URBG& rng, std::uint64_t sources = 0) {
    constexpr std::uint64_t exact_limit = 10000;
    constexpr std::uint64_t default_sample = 1000;
    const std::uint64_t n = g.node_count();
    if (n == 0) throw empty_graph_error("hop plot of an empty graph");

    std::uint64_t want = sources == 0 ? (n <= exact_limit ? n : default_sample) : sources;
    if (want > n) want = n;

    std::vector<node_id> picks;
    if (want == n) {
        picks.resize(n);
        for (node_id v = 0; v < n; ++v) picks[v] = v;
    } else {
        // Partial Fisher-Yates: the first `want` slots become the sample.
        std::vector<node_id> ids(n);
        for (node_id v = 0; v < n; ++v) ids[v] = v;
        for (std::uint64_t i = 0; i < want; ++i)
            std::swap(ids[i], ids[i + uniform_index(rng, n - i)]);
        picks.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(want));
    }

    std::vector<std::uint64_t> per_distance; // index h-1: pairs at exactly h
    std::vector<std::uint32_t> distance;
    std::vector<node_id> frontier;
    std::uint64_t finite = 0;
    for (node_id source : picks) {
        detail::bfs_distances(g, source, distance, frontier);
        for (node_id v = 0; v < n; ++v) {
            const std::uint32_t d = distance[v];
            if (d == 0 || d == ~std::uint32_t{0}) continue;
            if (per_distance.size() < d) per_distance.resize(d, 0);
            ++per_distance[d - 1];
            ++finite;
        }
    }

    HopPlot plot;
    plot.sources_used = want;
    plot.exact = want == n;
    plot.finite_pairs = finite;
    std::uint64_t cumulative = 0;
    for (std::size_t h = 0; h < per_distance.size(); ++h) {
        cumulative += per_distance[h];
        plot.points.emplace_back(static_cast<std::uint32_t>(h + 1),
                                 static_cast<double>(cumulative) / static_cast<double>(finite));
    }
    return plot;
}

// Seed convenience: hop-plot source sampling consumes the "stats" stream.
inline HopPlot hop_plot(const Graph& g, std::uint64_t seed, std::uint64_t sources = 0) {
    rng_t rng = make_rng(seed, "stats");
    return hop_plot(g, rng, sources);
}

// Largest vertical gap between two complementary CDFs, treated as
// right-continuous step functions that sit at 1 before their first grid
// point.  Evaluated on the union grid, where the supremum is attained.
inline double ks_distance(const CcdfSeries& a, const CcdfSeries& b) {
    if (a.points.empty() || b.points.empty())
        throw empty_series_error("distribution distance needs points on both sides");
    std::size_t ia = 0, ib = 0;
    double ya = 1.0, yb = 1.0, worst = 0.0;
    while (ia < a.points.size() || ib < b.points.size()) {
        double x;
        if (ib == b.points.size() || (ia < a.points.size() && a.points[ia].x <= b.points[ib].x))
            x = a.points[ia].x;
        else
            x = b.points[ib].x;
        while (ia < a.points.size() && a.points[ia].x == x) ya = a.points[ia++].fraction;
        while (ib < b.points.size() && b.points[ib].x == x) yb = b.points[ib++].fraction;
        worst = std::max(worst, std::abs(ya - yb));
    }
    return worst;
}

// Largest vertical gap between two hop plots, evaluated at every hop count
// either side reaches.  Beyond its last point a plot holds its final value
// (1 by construction when it has any points); before h = 1 it is 0.
inline double hop_plot_gap(const HopPlot& a, const HopPlot& b) {
    if (a.points.empty() || b.points.empty())
        throw empty_series_error("hop-plot gap needs points on both sides");
    const auto value_at = [](const HopPlot& plot, std::uint32_t h) {
        if (h < plot.points.front().first) return 0.0;
        if (h >= plot.points.back().first) return plot.points.back().second;
        return plot.points[h - plot.points.front().first].second;
    };
    const std::uint32_t last = std::max(a.points.back().first, b.points.back().first);
    double worst = 0.0;
    for (std::uint32_t h = 1; h <= last; ++h)
        worst = std::max(worst, std::abs(value_at(a, h) - value_at(b, h)));
    return worst;
}

// Which generator an edge-frequency probe should exercise.
enum class GeneratorKind { cl_slow, cl_fast, cl_fast_uncorrected, tcl };

// Measured and predicted placement probability for one watched pair.
struct EdgeProbe {
    Edge edge;
    double frequency; // share of runs in which the pair appeared
    double analytic;  // min(1, d_a * d_b / 2M) on the input graph
};

// Runs the chosen generator `runs` times and records how often each watched
// pair appears, next to its closed-form target under independent placement.
template <class URBG>
std::vector<EdgeProbe> empirical_edge_probabilities(const Graph& g, GeneratorKind kind,
                                                    std::uint64_t runs,
                                                    const std::vector<Edge>& watched,
                                                    const GenParams& params, URBG& rng) {
    if (runs == 0) throw empty_sample_error("edge-frequency probe needs at least one run");
    std::vector<std::uint64_t> hits(watched.size(), 0);
    for (std::uint64_t r = 0; r < runs; ++r) {
        Graph out;
        switch (kind) {
        case GeneratorKind::cl_slow: out = generate_cl_slow(g, rng); break;
        case GeneratorKind::cl_fast: out = generate_cl_fast(g, params, rng, true); break;
        case GeneratorKind::cl_fast_uncorrected:
            out = generate_cl_fast(g, params, rng, false);
            break;
        case GeneratorKind::tcl: out = generate_tcl(g, params, rng); break;
        }
        for (std::size_t w = 0; w < watched.size(); ++w)
            if (out.has_edge(watched[w].first, watched[w].second)) ++hits[w];
    }

    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    std::vector<EdgeProbe> probes;
    probes.reserve(watched.size());
    for (std::size_t w = 0; w < watched.size(); ++w) {
        const double product =
            static_cast<double>(g.degree(watched[w].first)) * g.degree(watched[w].second);
        probes.push_back({watched[w], static_cast<double>(hits[w]) / static_cast<double>(runs),
                          two_m > 0.0 ? std::min(1.0, product / two_m) : 0.0});
    }
    return probes;
}

// Everything the stats and compare commands report about one graph.
struct GraphSummary {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    CcdfSeries degree;
    CcdfSeries clustering;                  // empty when no node qualifies
    std::optional<double> transitivity;     // absent when undefined
    HopPlot hops;
};

struct SummaryOptions {
    std::uint64_t hop_sources = 0; // 0 = default policy
    ClusteringOptions clustering;
};

template <class URBG>
GraphSummary summarize(const Graph& g, const SummaryOptions& opt, URBG& rng) {
    GraphSummary s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();
    s.degree = degree_ccdf(g);
    try {
        s.clustering = clustering_ccdf(g, opt.clustering);
    } catch (const empty_sample_error&) {
        // No qualifying nodes; leave the series empty.
    }
    try {
        s.transitivity = global_clustering(g);
    } catch (const no_triples_error&) {
        s.transitivity.reset();
    }
    s.hops = hop_plot(g, rng, opt.hop_sources);
    return s;
}

} // namespace tcl
