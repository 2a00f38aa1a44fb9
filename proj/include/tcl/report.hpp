#pragma once

#include <string>

#include <json.hpp>

#include "fit.hpp"
#include "generate.hpp"
#include "stats.hpp"
#include "version.hpp"

namespace tcl::report {

// Reports preserve insertion order so identical runs serialize to identical
// bytes (the "timing" subtree is the one documented exception).
using json = nlohmann::ordered_json;

inline constexpr const char* schema_name = "tclgen-report";
inline constexpr int schema_version = 1;

inline json ccdf_json(const CcdfSeries& series) {
    json points = json::array();
    for (const CcdfPoint& p : series.points) points.push_back({p.x, p.fraction});
    return {{"population", series.population}, {"points", points}};
}

inline json hop_plot_json(const HopPlot& plot) {
    json points = json::array();
    for (const auto& [h, fraction] : plot.points) points.push_back({h, fraction});
    return {{"sources_used", plot.sources_used},
            {"exact", plot.exact},
            {"finite_pairs", plot.finite_pairs},
            {"points", points}};
}

inline json summary_json(const GraphSummary& s) {
    json doc{{"nodes", s.nodes}, {"edges", s.edges}};
    doc["degree_ccdf"] = ccdf_json(s.degree);
    doc["clustering_ccdf"] =
        s.clustering.points.empty() ? json(nullptr) : ccdf_json(s.clustering);
    doc["global_clustering"] = s.transitivity ? json(*s.transitivity) : json(nullptr);
    doc["hop_plot"] = hop_plot_json(s.hops);
    return doc;
}

inline json metrics_json(const GenMetrics& m) {
    return {{"attempts", m.attempts},
            {"collisions", m.collisions},
            {"insertions", m.insertions()},
            {"fallbacks", m.fallbacks}};
}

// The per-round wall times live under the top-level "timing" subtree, not
// here, so the trace itself stays byte-stable for a fixed seed.
inline json trace_json(const EmTrace& trace) {
    json rounds = json::array();
    for (const EmIteration& it : trace.iterations) rounds.push_back({it.iteration, it.rho});
    return {{"rho", trace.rho_final}, {"converged", trace.converged}, {"rounds", rounds}};
}

inline json trace_timing_json(const EmTrace& trace) {
    json seconds = json::array();
    for (const EmIteration& it : trace.iterations) seconds.push_back(it.seconds);
    return seconds;
}

// Skeleton shared by every subcommand: tool identity, invoked command,
// echoed parameters, command-specific outputs, and wall-clock timings.
// Everything except "timing" is a pure function of inputs and seed.
inline json make_report(const std::string& command, json parameters, json outputs, json timing) {
    return {{"tool", "tclgen"},
            {"version", version_string},
            {"schema", schema_name},
            {"schema_version", schema_version},
            {"command", command},
            {"parameters", std::move(parameters)},
            {"outputs", std::move(outputs)},
            {"timing", std::move(timing)}};
}

inline std::string to_bytes(const json& doc) { return doc.dump(2) + "\n"; }

// The determinism contract compares reports with the timing subtree removed.
inline json strip_timing(json doc) {
    doc.erase("timing");
    return doc;
}

} // namespace tcl::report
