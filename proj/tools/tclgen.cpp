// tclgen: learn a transitivity parameter from a network, synthesize graphs
// that match its degree structure and clustering, and report the usual
// distribution summaries.  Every subcommand emits a JSON run report (stdout
// by default) that is byte-identical across runs for a fixed seed, except
// for the "timing" subtree.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tcl/edge_list_io.hpp>
#include <tcl/report.hpp>
#include <tcl/synthetic.hpp>
#include <tcl/tcl.hpp>

namespace {

using tcl::report::json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// ---- shared flags -----------------------------------------------------------

struct IngestFlags {
    std::uint32_t degree_cap = 0;
    std::string comment_prefix = "#";
};

void add_ingest_flags(CLI::App* cmd, IngestFlags& flags) {
    cmd->add_option("--degree-cap", flags.degree_cap,
                    "Drop nodes whose degree exceeds this bound (0 = keep all)")
        ->capture_default_str();
    cmd->add_option("--comment-prefix", flags.comment_prefix,
                    "Lines starting with this character are skipped")
        ->check([](const std::string& s) {
            return s.size() == 1 ? std::string{} : std::string{"must be a single character"};
        })
        ->capture_default_str();
}

struct CommonFlags {
    std::uint64_t seed = 1;
    std::string report_path;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Master seed for all random draws")
        ->envname("TCLGEN_SEED")
        ->capture_default_str();
    cmd->add_option("--report", flags.report_path,
                    "Write the JSON run report here instead of stdout");
}

tcl::LoadedGraph ingest(const std::string& path, const IngestFlags& flags) {
    tcl::IngestOptions opt;
    opt.degree_cap = flags.degree_cap;
    opt.comment_prefix = flags.comment_prefix[0];
    return tcl::load_edge_list(path, opt);
}

json ingest_json(const std::string& path, const IngestFlags& flags) {
    return {{"input", path},
            {"degree_cap", flags.degree_cap},
            {"comment_prefix", flags.comment_prefix}};
}

void emit_report(const json& doc, const CommonFlags& common) {
    const std::string bytes = tcl::report::to_bytes(doc);
    if (common.report_path.empty()) {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        return;
    }
    std::ofstream out(common.report_path, std::ios::binary);
    if (!out) throw tcl::io_error("cannot open " + common.report_path + " for writing");
    out << bytes;
    if (!out) throw tcl::io_error("write failure on " + common.report_path);
}

// Accepts "auto" or a probability literal.
std::string rho_check(const std::string& text) {
    if (text == "auto") return {};
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size() && v >= 0.0 && v <= 1.0) return {};
    } catch (const std::exception&) {
    }
    return "must be 'auto' or a number in [0, 1]";
}

std::string scales_check(const std::string& text) {
    std::size_t count = 0;
    std::string token;
    for (char c : text + ",") {
        if (c != ',') {
            token.push_back(c);
            continue;
        }
        if (token.empty()) continue;
        std::uint64_t v = 0;
        if (!tcl::detail::parse_u64(token, v) || v == 0)
            return "must be a comma-separated list of positive integers";
        ++count;
        token.clear();
    }
    return count != 0 ? std::string{} : std::string{"must list at least one scale"};
}

std::string hop_sources_check(const std::string& text) {
    if (text == "auto" || text == "all") return {};
    std::uint64_t v = 0;
    if (tcl::detail::parse_u64(text, v) && v > 0) return {};
    return "must be 'auto', 'all', or a positive count";
}

std::uint64_t resolve_hop_sources(const std::string& text, std::size_t node_count) {
    if (text == "auto") return 0;
    if (text == "all") return node_count;
    std::uint64_t v = 0;
    (void)tcl::detail::parse_u64(text, v); // pre-validated by hop_sources_check
    return v;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::pair<double, double>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tcl::io_error("cannot open " + path + " for writing");
    out << header << '\n';
    char line[80];
    for (const auto& [x, y] : rows) {
        std::snprintf(line, sizeof line, "%.17g,%.17g", x, y);
        out << line << '\n';
    }
    if (!out) throw tcl::io_error("write failure on " + path);
}

// ---- fit ---------------------------------------------------------------------

struct FitArgs {
    std::string input;
    IngestFlags ingest;
    CommonFlags common;
    tcl::EmConfig em;
};

void run_fit(const FitArgs& args) {
    Timer total;
    const tcl::LoadedGraph lg = ingest(args.input, args.ingest);

    Timer fit_timer;
    const tcl::EmTrace trace = tcl::fit_rho(lg.graph, args.em, args.common.seed);
    const double fit_seconds = fit_timer.seconds();

    json params = ingest_json(args.input, args.ingest);
    params["seed"] = args.common.seed;
    params["samples_per_iteration"] = args.em.samples_per_iteration;
    params["max_iterations"] = args.em.max_iterations;
    params["tolerance"] = args.em.tolerance;
    params["burn_in"] = args.em.burn_in;
    params["rho_init"] = args.em.rho_init;

    json outputs{{"nodes", lg.graph.node_count()},
                 {"edges", lg.graph.edge_count()},
                 {"fit", tcl::report::trace_json(trace)}};
    json timing{{"total_seconds", total.seconds()},
                {"fit_seconds", fit_seconds},
                {"round_seconds", tcl::report::trace_timing_json(trace)}};
    emit_report(tcl::report::make_report("fit", params, outputs, timing), args.common);
    std::fprintf(stderr, "fitted rho = %.6f (%s after %zu rounds)\n", trace.rho_final,
                 trace.converged ? "converged" : "not converged", trace.iterations.size());
}

// ---- generate ------------------------------------------------------------------

struct GenerateArgs {
    std::string input;
    std::string output;
    IngestFlags ingest;
    CommonFlags common;
    std::string rho = "auto";
    std::string generator = "tcl";
    std::uint64_t iterations = 0;
    std::uint64_t max_attempts = 0;
    std::uint64_t fit_samples = 10000;
};

void run_generate(const GenerateArgs& args) {
    Timer total;
    const tcl::LoadedGraph lg = ingest(args.input, args.ingest);

    json params = ingest_json(args.input, args.ingest);
    params["output"] = args.output;
    params["seed"] = args.common.seed;
    params["generator"] = args.generator;
    params["rho"] = args.rho;
    params["iterations"] = args.iterations;
    params["max_attempts"] = args.max_attempts;

    json outputs{{"nodes", lg.graph.node_count()}, {"edges", lg.graph.edge_count()}};
    json timing{{"total_seconds", 0.0}};

    tcl::GenParams gen;
    gen.iterations = args.iterations;
    gen.max_attempts = args.max_attempts;

    if (args.generator == "tcl") {
        if (args.rho == "auto") {
            params["fit_samples"] = args.fit_samples;
            tcl::EmConfig cfg;
            cfg.samples_per_iteration = args.fit_samples;
            Timer fit_timer;
            const tcl::EmTrace trace = tcl::fit_rho(lg.graph, cfg, args.common.seed);
            timing["fit_seconds"] = fit_timer.seconds();
            gen.rho = trace.rho_final;
            outputs["fit"] = tcl::report::trace_json(trace);
        } else {
            gen.rho = std::stod(args.rho);
        }
        outputs["rho_used"] = gen.rho;
    } else {
        outputs["rho_used"] = nullptr; // degree-weighted placement only
    }

    Timer gen_timer;
    tcl::GenMetrics metrics;
    tcl::Graph out;
    if (args.generator == "tcl")
        out = tcl::generate_tcl(lg.graph, gen, args.common.seed, &metrics);
    else if (args.generator == "cl")
        out = tcl::generate_cl_fast(lg.graph, gen, args.common.seed, true, &metrics);
    else
        out = tcl::generate_cl_fast(lg.graph, gen, args.common.seed, false, &metrics);
    timing["generate_seconds"] = gen_timer.seconds();

    Timer write_timer;
    tcl::write_edge_list(out, args.output, &lg.labels);
    timing["write_seconds"] = write_timer.seconds();

    outputs["metrics"] = tcl::report::metrics_json(metrics);
    timing["total_seconds"] = total.seconds();
    emit_report(tcl::report::make_report("generate", params, outputs, timing), args.common);
    std::fprintf(stderr, "wrote %zu edges over %zu nodes to %s\n", out.edge_count(),
                 out.node_count(), args.output.c_str());
}

// ---- stats ----------------------------------------------------------------------

struct StatsArgs {
    std::string input;
    IngestFlags ingest;
    CommonFlags common;
    std::string hop_sources = "auto";
    bool include_low_degree = false;
    std::string csv_prefix;
};

void run_stats(const StatsArgs& args) {
    Timer total;
    const tcl::LoadedGraph lg = ingest(args.input, args.ingest);

    tcl::SummaryOptions opt;
    opt.hop_sources = resolve_hop_sources(args.hop_sources, lg.graph.node_count());
    opt.clustering.include_low_degree = args.include_low_degree;
    tcl::rng_t rng = tcl::make_rng(args.common.seed, "stats");
    const tcl::GraphSummary summary = tcl::summarize(lg.graph, opt, rng);

    if (!args.csv_prefix.empty()) {
        std::vector<std::pair<double, double>> rows;
        for (const tcl::CcdfPoint& p : summary.degree.points) rows.push_back({p.x, p.fraction});
        write_csv(args.csv_prefix + ".degree.csv", "degree,fraction_above", rows);
        rows.clear();
        for (const tcl::CcdfPoint& p : summary.clustering.points)
            rows.push_back({p.x, p.fraction});
        write_csv(args.csv_prefix + ".clustering.csv", "coefficient,fraction_above", rows);
        rows.clear();
        for (const auto& [h, f] : summary.hops.points) rows.push_back({static_cast<double>(h), f});
        write_csv(args.csv_prefix + ".hops.csv", "hops,fraction_within", rows);
    }

    json params = ingest_json(args.input, args.ingest);
    params["seed"] = args.common.seed;
    params["hop_sources"] = args.hop_sources;
    params["include_low_degree"] = args.include_low_degree;
    params["csv_prefix"] = args.csv_prefix;

    json timing{{"total_seconds", total.seconds()}};
    emit_report(
        tcl::report::make_report("stats", params, tcl::report::summary_json(summary), timing),
        args.common);
    std::fprintf(stderr, "summarized %zu nodes, %zu edges\n", lg.graph.node_count(),
                 lg.graph.edge_count());
}

// ---- compare ---------------------------------------------------------------------

struct CompareArgs {
    std::string input_a;
    std::string input_b;
    IngestFlags ingest;
    CommonFlags common;
    std::string hop_sources = "auto";
    bool include_low_degree = false;
};

void run_compare(const CompareArgs& args) {
    Timer total;
    const tcl::LoadedGraph a = ingest(args.input_a, args.ingest);
    const tcl::LoadedGraph b = ingest(args.input_b, args.ingest);

    tcl::SummaryOptions opt;
    opt.clustering.include_low_degree = args.include_low_degree;
    opt.hop_sources = resolve_hop_sources(args.hop_sources, a.graph.node_count());
    tcl::rng_t rng_a = tcl::make_rng(args.common.seed, "stats", 0);
    const tcl::GraphSummary sa = tcl::summarize(a.graph, opt, rng_a);
    opt.hop_sources = resolve_hop_sources(args.hop_sources, b.graph.node_count());
    tcl::rng_t rng_b = tcl::make_rng(args.common.seed, "stats", 1);
    const tcl::GraphSummary sb = tcl::summarize(b.graph, opt, rng_b);

    json distances;
    distances["degree_ks"] = tcl::ks_distance(sa.degree, sb.degree);
    if (!sa.clustering.points.empty() && !sb.clustering.points.empty())
        distances["clustering_ks"] = tcl::ks_distance(sa.clustering, sb.clustering);
    else
        distances["clustering_ks"] = nullptr;
    if (sa.transitivity && sb.transitivity)
        distances["global_clustering_diff"] = std::abs(*sa.transitivity - *sb.transitivity);
    else
        distances["global_clustering_diff"] = nullptr;
    if (!sa.hops.points.empty() && !sb.hops.points.empty())
        distances["hop_gap"] = tcl::hop_plot_gap(sa.hops, sb.hops);
    else
        distances["hop_gap"] = nullptr;

    json params = ingest_json(args.input_a, args.ingest);
    params.erase("input");
    params["input_a"] = args.input_a;
    params["input_b"] = args.input_b;
    params["seed"] = args.common.seed;
    params["hop_sources"] = args.hop_sources;
    params["include_low_degree"] = args.include_low_degree;

    json outputs{{"a", tcl::report::summary_json(sa)},
                 {"b", tcl::report::summary_json(sb)},
                 {"distances", distances}};
    json timing{{"total_seconds", total.seconds()}};
    emit_report(tcl::report::make_report("compare", params, outputs, timing), args.common);
    std::fprintf(stderr, "degree KS = %.4f\n", distances["degree_ks"].get<double>());
}

// ---- verify ----------------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    IngestFlags ingest;
    CommonFlags common;
    std::uint64_t runs = 2000;
    std::string generator = "fast";
    double rho = 0.0;
    std::uint64_t iterations = 0;
    std::vector<std::string> watch;
};

void run_verify(const VerifyArgs& args) {
    Timer total;
    const tcl::LoadedGraph lg = ingest(args.input, args.ingest);
    const tcl::Graph& g = lg.graph;

    const auto dense_of = [&lg](std::uint64_t label) {
        const auto it = std::lower_bound(lg.labels.begin(), lg.labels.end(), label);
        if (it == lg.labels.end() || *it != label)
            throw tcl::error("unknown node label " + std::to_string(label));
        return static_cast<tcl::node_id>(it - lg.labels.begin());
    };

    std::vector<tcl::Edge> watched;
    if (!args.watch.empty()) {
        for (const std::string& pair_text : args.watch) {
            const auto comma = pair_text.find(',');
            std::uint64_t la = 0, lb = 0;
            if (comma == std::string::npos ||
                !tcl::detail::parse_u64(pair_text.substr(0, comma), la) ||
                !tcl::detail::parse_u64(pair_text.substr(comma + 1), lb))
                throw tcl::error("bad --watch pair '" + pair_text + "', expected 'a,b'");
            watched.push_back({dense_of(la), dense_of(lb)});
        }
    } else if (g.edge_count() <= 500) {
        watched = g.edges();
    } else {
        // Edges incident to the ten highest-degree nodes: the pairs whose
        // placement probabilities are largest and hardest to get right.
        std::vector<tcl::node_id> order(g.node_count());
        for (tcl::node_id v = 0; v < g.node_count(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&g](tcl::node_id x, tcl::node_id y) {
            return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y;
        });
        const std::set<tcl::node_id> top(order.begin(),
                                         order.begin() + std::min<std::size_t>(10, order.size()));
        std::set<tcl::Edge> picks;
        for (tcl::node_id v : top)
            for (tcl::node_id u : g.neighbors(v))
                picks.insert({std::min(u, v), std::max(u, v)});
        watched.assign(picks.begin(), picks.end());
    }

    tcl::GeneratorKind kind;
    if (args.generator == "slow")
        kind = tcl::GeneratorKind::cl_slow;
    else if (args.generator == "fast")
        kind = tcl::GeneratorKind::cl_fast;
    else if (args.generator == "fast-uncorrected")
        kind = tcl::GeneratorKind::cl_fast_uncorrected;
    else
        kind = tcl::GeneratorKind::tcl;

    tcl::GenParams gen;
    gen.rho = args.rho;
    gen.iterations = args.iterations;
    tcl::rng_t rng = tcl::make_rng(args.common.seed, "verify");
    const auto probes =
        tcl::empirical_edge_probabilities(g, kind, args.runs, watched, gen, rng);

    double worst = 0.0;
    json rows = json::array();
    for (const tcl::EdgeProbe& p : probes) {
        const double diff = std::abs(p.frequency - p.analytic);
        worst = std::max(worst, diff);
        rows.push_back({{"edge", {lg.labels[p.edge.first], lg.labels[p.edge.second]}},
                        {"frequency", p.frequency},
                        {"analytic", p.analytic},
                        {"abs_diff", diff}});
    }

    json params = ingest_json(args.input, args.ingest);
    params["seed"] = args.common.seed;
    params["runs"] = args.runs;
    params["generator"] = args.generator;
    params["rho"] = args.rho;
    params["iterations"] = args.iterations;
    params["watch"] = args.watch;

    json outputs{{"watched", watched.size()}, {"max_abs_diff", worst}, {"probes", rows}};
    json timing{{"total_seconds", total.seconds()}};
    emit_report(tcl::report::make_report("verify", params, outputs, timing), args.common);
    std::fprintf(stderr, "max |frequency - analytic| = %.4f over %zu pairs\n", worst,
                 watched.size());
}

// ---- bench -----------------------------------------------------------------------

struct BenchArgs {
    std::string input;
    IngestFlags ingest;
    CommonFlags common;
    std::string scales = "1,2";
    std::uint64_t reps = 0; // 0 = deterministic policy from edge count
    std::string generator = "tcl";
    double rho = 0.0;
};

void run_bench(const BenchArgs& args) {
    Timer total;
    const tcl::LoadedGraph lg = ingest(args.input, args.ingest);

    std::vector<std::size_t> scales;
    {
        std::string token;
        for (char c : args.scales + ",") {
            if (c != ',') {
                token.push_back(c);
                continue;
            }
            if (token.empty()) continue;
            std::uint64_t v = 0;
            (void)tcl::detail::parse_u64(token, v); // pre-validated by scales_check
            scales.push_back(v);
            token.clear();
        }
    }

    // Repetition policy is a function of the workload, not of measured time,
    // so the non-timing half of the report stays deterministic.
    const auto reps_for = [&args](std::size_t edges) -> std::uint64_t {
        if (args.reps != 0) return args.reps;
        const std::uint64_t by_size = 400000 / std::max<std::uint64_t>(edges, 1);
        return std::min<std::uint64_t>(std::max<std::uint64_t>(by_size, 3), 200);
    };

    tcl::rng_t rng = tcl::make_rng(args.common.seed, "bench");
    json rows = json::array();
    json timing_rows = json::array();
    std::vector<double> per_run_seconds;
    for (std::size_t scale : scales) {
        const tcl::Graph scaled = tcl::disjoint_copies(lg.graph, scale);
        const std::uint64_t reps = reps_for(scaled.edge_count());
        tcl::GenParams gen;
        gen.rho = args.rho;

        std::uint64_t attempts = 0, insertions = 0;
        Timer scale_timer;
        for (std::uint64_t r = 0; r < reps; ++r) {
            tcl::GenMetrics metrics;
            if (args.generator == "tcl")
                (void)tcl::generate_tcl(scaled, gen, rng, &metrics);
            else
                (void)tcl::generate_cl_fast(scaled, gen, rng, true, &metrics);
            attempts += metrics.attempts;
            insertions += metrics.insertions();
        }
        const double seconds = scale_timer.seconds();
        per_run_seconds.push_back(seconds / static_cast<double>(reps));

        rows.push_back({{"scale", scale},
                        {"nodes", scaled.node_count()},
                        {"edges", scaled.edge_count()},
                        {"reps", reps},
                        {"attempts", attempts},
                        {"insertions", insertions},
                        {"attempts_per_insertion",
                         static_cast<double>(attempts) / static_cast<double>(insertions)}});
        timing_rows.push_back({{"scale", scale},
                               {"seconds_per_run", per_run_seconds.back()},
                               {"total_seconds", seconds}});
    }

    json params = ingest_json(args.input, args.ingest);
    params["seed"] = args.common.seed;
    params["scales"] = args.scales;
    params["reps"] = args.reps;
    params["generator"] = args.generator;
    params["rho"] = args.rho;

    json timing{{"total_seconds", total.seconds()}, {"rows", timing_rows}};
    if (per_run_seconds.size() >= 2 && per_run_seconds.front() > 0.0)
        timing["time_ratio_last_over_first"] = per_run_seconds.back() / per_run_seconds.front();

    emit_report(tcl::report::make_report("bench", params, {{"rows", rows}}, timing), args.common);
    if (per_run_seconds.size() >= 2)
        std::fprintf(stderr, "per-run time ratio (last/first scale) = %.2f\n",
                     per_run_seconds.back() / per_run_seconds.front());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree- and clustering-matched graph synthesis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tclgen ") + tcl::version_string);

    FitArgs fit_args;
    CLI::App* fit = app.add_subcommand("fit", "Fit the transitive-closure probability");
    fit->add_option("input", fit_args.input, "Edge-list file")->required();
    add_ingest_flags(fit, fit_args.ingest);
    add_common_flags(fit, fit_args.common);
    fit->add_option("--samples", fit_args.em.samples_per_iteration,
                    "Edges sampled per EM round")
        ->capture_default_str();
    fit->add_option("--max-iterations", fit_args.em.max_iterations, "EM round cap")
        ->capture_default_str();
    fit->add_option("--tolerance", fit_args.em.tolerance, "Convergence threshold")
        ->capture_default_str();
    fit->add_option("--burn-in", fit_args.em.burn_in, "Rounds ignored by the running mean")
        ->capture_default_str();
    fit->add_option("--rho-init", fit_args.em.rho_init, "Starting estimate")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "Synthesize a graph from a seed network");
    gen->add_option("input", gen_args.input, "Edge-list file")->required();
    gen->add_option("-o,--output", gen_args.output, "Where to write the generated edge list")
        ->required();
    add_ingest_flags(gen, gen_args.ingest);
    add_common_flags(gen, gen_args.common);
    gen->add_option("--rho", gen_args.rho, "Transitive-closure probability, or 'auto' to fit")
        ->check(rho_check)
        ->capture_default_str();
    gen->add_option("--generator", gen_args.generator, "tcl, cl, or cl-uncorrected")
        ->check(CLI::IsMember({"tcl", "cl", "cl-uncorrected"}))
        ->capture_default_str();
    gen->add_option("--iterations", gen_args.iterations,
                    "Edge replacements (0 = one per edge)")
        ->capture_default_str();
    gen->add_option("--max-attempts", gen_args.max_attempts,
                    "Candidate budget before giving up (0 = automatic)")
        ->capture_default_str();
    gen->add_option("--fit-samples", gen_args.fit_samples,
                    "Edges sampled per EM round when rho is 'auto'")
        ->capture_default_str();

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "Summarize a graph's distributions");
    stats->add_option("input", stats_args.input, "Edge-list file")->required();
    add_ingest_flags(stats, stats_args.ingest);
    add_common_flags(stats, stats_args.common);
    stats->add_option("--hop-sources", stats_args.hop_sources,
                      "BFS sources: 'auto', 'all', or a count")
        ->check(hop_sources_check)
        ->capture_default_str();
    stats->add_flag("--include-low-degree", stats_args.include_low_degree,
                    "Count degree<2 nodes in the clustering distribution as 0");
    stats->add_option("--csv", stats_args.csv_prefix,
                      "Also write <prefix>.degree.csv, .clustering.csv, .hops.csv");

    CompareArgs cmp_args;
    CLI::App* cmp = app.add_subcommand("compare", "Distribution distances between two graphs");
    cmp->add_option("input_a", cmp_args.input_a, "First edge-list file")->required();
    cmp->add_option("input_b", cmp_args.input_b, "Second edge-list file")->required();
    add_ingest_flags(cmp, cmp_args.ingest);
    add_common_flags(cmp, cmp_args.common);
    cmp->add_option("--hop-sources", cmp_args.hop_sources,
                    "BFS sources: 'auto', 'all', or a count")
        ->check(hop_sources_check)
        ->capture_default_str();
    cmp->add_flag("--include-low-degree", cmp_args.include_low_degree,
                  "Count degree<2 nodes in the clustering distribution as 0");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Empirical edge frequencies against the closed-form target");
    verify->add_option("input", verify_args.input, "Edge-list file")->required();
    add_ingest_flags(verify, verify_args.ingest);
    add_common_flags(verify, verify_args.common);
    verify->add_option("--runs", verify_args.runs, "Generator runs to average over")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--generator", verify_args.generator,
                       "slow, fast, fast-uncorrected, or tcl")
        ->check(CLI::IsMember({"slow", "fast", "fast-uncorrected", "tcl"}))
        ->capture_default_str();
    verify->add_option("--rho", verify_args.rho, "Transitive-closure probability (tcl only)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    verify->add_option("--iterations", verify_args.iterations,
                       "Edge replacements (tcl only, 0 = one per edge)")
        ->capture_default_str();
    verify->add_option("--watch", verify_args.watch,
                       "Node-label pair 'a,b' to track (repeatable); default: original "
                       "edges, or the busiest nodes' edges on large graphs");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Generator timing across workload scales");
    bench->add_option("input", bench_args.input, "Edge-list file")->required();
    add_ingest_flags(bench, bench_args.ingest);
    add_common_flags(bench, bench_args.common);
    bench->add_option("--scales", bench_args.scales,
                      "Comma-separated disjoint-copy multipliers")
        ->check(scales_check)
        ->capture_default_str();
    bench->add_option("--reps", bench_args.reps,
                      "Runs per scale (0 = pick from the edge count)")
        ->capture_default_str();
    bench->add_option("--generator", bench_args.generator, "tcl or cl")
        ->check(CLI::IsMember({"tcl", "cl"}))
        ->capture_default_str();
    bench->add_option("--rho", bench_args.rho, "Transitive-closure probability (tcl only)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (fit->parsed()) run_fit(fit_args);
        if (gen->parsed()) run_generate(gen_args);
        if (stats->parsed()) run_stats(stats_args);
        if (cmp->parsed()) run_compare(cmp_args);
        if (verify->parsed()) run_verify(verify_args);
        if (bench->parsed()) run_bench(bench_args);
    } catch (const tcl::error& e) {
        std::fprintf(stderr, "tclgen: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "tclgen: internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
