// End-to-end coverage of the tclgen binary and the report envelope it emits:
// exit-code contract, JSON shape, determinism for a fixed seed, artifact
// round-trips, CSV export, and agreement between reported numbers and the
// library calls that produce them.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <tcl/report.hpp>
#include <tcl/tcl.hpp>

#include "support/helpers.hpp"

namespace fs = std::filesystem;
using tcl::report::json;
using testing::fixture_path;
using testing::run_tool;

namespace {

// Scratch space for artifacts; tests run serially, so fixed names are safe.
fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "tclgen-cli-tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_report(const testing::ToolRun& run) {
    REQUIRE(run.exit_code == 0);
    const json doc = json::parse(run.output);
    CHECK(doc.at("tool") == "tclgen");
    CHECK(doc.at("schema") == tcl::report::schema_name);
    CHECK(doc.at("schema_version") == tcl::report::schema_version);
    return doc;
}

std::string stripped(const json& doc) { return tcl::report::strip_timing(doc).dump(); }

} // namespace

TEST_CASE("report envelope and helpers", "[cli]") {
    tcl::CcdfSeries series{{{0.0, 0.5}, {2.0, 0.25}}, 4};
    const json ccdf = tcl::report::ccdf_json(series);
    CHECK(ccdf.at("population") == 4);
    CHECK(ccdf.at("points") == json::array({{0.0, 0.5}, {2.0, 0.25}}));

    tcl::GenMetrics metrics;
    metrics.attempts = 10;
    metrics.collisions = 3;
    metrics.fallbacks = 1;
    const json m = tcl::report::metrics_json(metrics);
    CHECK(m.at("attempts") == 10);
    CHECK(m.at("collisions") == 3);
    CHECK(m.at("insertions") == 7);
    CHECK(m.at("fallbacks") == 1);

    const json doc = tcl::report::make_report("stats", {{"seed", 1}}, {{"nodes", 2}},
                                              {{"total_seconds", 0.25}});
    const std::vector<std::string> expected_keys{"tool",    "version",    "schema",
                                                 "schema_version", "command", "parameters",
                                                 "outputs", "timing"};
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == expected_keys);
    CHECK(doc.at("command") == "stats");
    CHECK(doc.at("version") == tcl::version_string);

    const json bare = tcl::report::strip_timing(doc);
    CHECK_FALSE(bare.contains("timing"));
    CHECK(bare.at("outputs").at("nodes") == 2);

    const std::string bytes = tcl::report::to_bytes(doc);
    REQUIRE_FALSE(bytes.empty());
    CHECK(bytes.back() == '\n');
    CHECK(json::parse(bytes) == doc);
}

TEST_CASE("version, help, and usage errors", "[cli]") {
    const auto version = run_tool("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.output.find("tclgen") != std::string::npos);

    CHECK(run_tool("--help").exit_code == 0);
    CHECK(run_tool("").exit_code == 1);           // a subcommand is required
    CHECK(run_tool("frobnicate").exit_code == 1); // unknown subcommand
    CHECK(run_tool("fit").exit_code == 1);        // missing input argument
    CHECK(run_tool("generate " + fixture_path("skew_300.edges")).exit_code == 1); // no --output
    CHECK(run_tool("stats " + fixture_path("skew_300.edges") + " --hop-sources=-3").exit_code ==
          1);
    CHECK(run_tool("bench " + fixture_path("skew_300.edges") + " --scales 0").exit_code == 1);
    CHECK(run_tool("generate " + fixture_path("skew_300.edges") + " -o /tmp/x --rho 1.5")
              .exit_code == 1);
}

TEST_CASE("data problems exit with the data error code", "[cli]") {
    CHECK(run_tool("stats /nonexistent-graph.edges").exit_code == 2);

    const fs::path bad = scratch() / "malformed.edges";
    std::ofstream(bad) << "0 1\n1 2 3\n";
    CHECK(run_tool("stats " + bad.string()).exit_code == 2);
    CHECK(run_tool("fit " + bad.string()).exit_code == 2);
}

TEST_CASE("generate writes a loadable artifact and a coherent report", "[cli]") {
    const fs::path out = scratch() / "generated.edges";
    const auto run = run_tool("generate " + fixture_path("skew_300.edges") + " -o " +
                              out.string() + " --rho 0.3 --seed 7");
    const json doc = parse_report(run);

    CHECK(doc.at("command") == "generate");
    CHECK(doc.at("parameters").at("seed") == 7);
    CHECK(doc.at("parameters").at("rho") == "0.3");
    CHECK(doc.at("parameters").at("generator") == "tcl");
    CHECK(doc.at("outputs").at("rho_used") == 0.3);

    const json& metrics = doc.at("outputs").at("metrics");
    CHECK(metrics.at("attempts").get<std::uint64_t>() ==
          metrics.at("collisions").get<std::uint64_t>() +
              metrics.at("insertions").get<std::uint64_t>());

    const tcl::Graph original = testing::load_fixture("skew_300.edges");
    const tcl::Graph artifact = tcl::load_edge_list(out.string()).graph;
    CHECK(artifact.node_count() == original.node_count());
    CHECK(artifact.edge_count() == original.edge_count());
    CHECK(doc.at("outputs").at("nodes") == original.node_count());
    CHECK(doc.at("outputs").at("edges") == original.edge_count());
}

TEST_CASE("generate is byte-reproducible for a fixed seed", "[cli]") {
    const fs::path out_a = scratch() / "repro_a.edges";
    const fs::path out_b = scratch() / "repro_b.edges";
    const std::string base = "generate " + fixture_path("skew_300.edges") + " --rho 0.4 ";

    const json first = parse_report(run_tool(base + "-o " + out_a.string() + " --seed 11"));
    const json second = parse_report(run_tool(base + "-o " + out_b.string() + " --seed 11"));
    CHECK(slurp(out_a) == slurp(out_b));
    // The artifact path differs, so compare everything except parameters.output.
    json lhs = tcl::report::strip_timing(first);
    json rhs = tcl::report::strip_timing(second);
    lhs.at("parameters").erase("output");
    rhs.at("parameters").erase("output");
    CHECK(lhs.dump() == rhs.dump());

    const fs::path out_c = scratch() / "repro_c.edges";
    parse_report(run_tool(base + "-o " + out_c.string() + " --seed 12"));
    CHECK(slurp(out_a) != slurp(out_c));
}

TEST_CASE("generate with automatic rho records the fit", "[cli]") {
    const fs::path out = scratch() / "auto_rho.edges";
    const auto run = run_tool("generate " + fixture_path("skew_300.edges") + " -o " +
                              out.string() + " --seed 21 --fit-samples 500");
    const json doc = parse_report(run);
    CHECK(doc.at("parameters").at("rho") == "auto");
    REQUIRE(doc.at("outputs").contains("fit"));
    const double fitted = doc.at("outputs").at("fit").at("rho").get<double>();
    CHECK(doc.at("outputs").at("rho_used").get<double>() == fitted);
    CHECK(fitted >= 0.0);
    CHECK(fitted <= 1.0);
    CHECK(doc.at("outputs").at("fit").at("rounds").size() >= 1);
}

TEST_CASE("stats report matches the library computation", "[cli]") {
    const auto run =
        run_tool("stats " + fixture_path("skew_300.edges") + " --hop-sources all --seed 3");
    const json doc = parse_report(run);
    const json& out = doc.at("outputs");

    const tcl::Graph g = testing::load_fixture("skew_300.edges");
    CHECK(out.at("nodes") == g.node_count());
    CHECK(out.at("edges") == g.edge_count());
    CHECK(out.at("degree_ccdf") == tcl::report::ccdf_json(tcl::degree_ccdf(g)));
    CHECK(out.at("clustering_ccdf") == tcl::report::ccdf_json(tcl::clustering_ccdf(g)));
    CHECK(out.at("global_clustering").get<double>() == tcl::global_clustering(g));

    tcl::rng_t rng = tcl::make_rng(3, "stats"); // same stream the tool derives
    const tcl::HopPlot hops = tcl::hop_plot(g, rng, g.node_count());
    CHECK(out.at("hop_plot") == tcl::report::hop_plot_json(hops));
    CHECK(out.at("hop_plot").at("exact") == true);
}

TEST_CASE("stats writes the three CSV exports", "[cli]") {
    const fs::path prefix = scratch() / "export";
    const auto run = run_tool("stats " + fixture_path("skew_300.edges") + " --csv " +
                              prefix.string() + " --hop-sources all");
    const json doc = parse_report(run);

    const std::string degree = slurp(prefix.string() + ".degree.csv");
    CHECK(degree.rfind("degree,fraction_above\n", 0) == 0);
    const std::size_t lines = std::count(degree.begin(), degree.end(), '\n');
    CHECK(lines == doc.at("outputs").at("degree_ccdf").at("points").size() + 1);

    CHECK(slurp(prefix.string() + ".clustering.csv")
              .rfind("coefficient,fraction_above\n", 0) == 0);
    CHECK(slurp(prefix.string() + ".hops.csv").rfind("hops,fraction_within\n", 0) == 0);
}

TEST_CASE("compare of a graph with itself reports zero distances", "[cli]") {
    const std::string path = fixture_path("skew_300.edges");
    const auto run = run_tool("compare " + path + " " + path + " --hop-sources all");
    const json distances = parse_report(run).at("outputs").at("distances");
    CHECK(distances.at("degree_ks").get<double>() == 0.0);
    CHECK(distances.at("clustering_ks").get<double>() == 0.0);
    CHECK(distances.at("global_clustering_diff").get<double>() == 0.0);
    CHECK(distances.at("hop_gap").get<double>() == 0.0);
}

TEST_CASE("verify probes watched pairs and reports the worst deviation", "[cli]") {
    // hub_201 has 250 edges, so the default watch list is every original edge.
    const auto run = run_tool("verify " + fixture_path("hub_201.edges") +
                              " --runs 200 --generator fast --seed 5");
    const json doc = parse_report(run);
    const json& out = doc.at("outputs");
    CHECK(out.at("watched") == 250);
    REQUIRE(out.at("probes").size() == 250);
    const double worst = out.at("max_abs_diff").get<double>();
    CHECK(worst >= 0.0);
    CHECK(worst <= 1.0);

    double recomputed = 0.0;
    for (const json& probe : out.at("probes")) {
        const double diff =
            std::abs(probe.at("frequency").get<double>() - probe.at("analytic").get<double>());
        CHECK(probe.at("abs_diff").get<double>() == Catch::Approx(diff).margin(1e-15));
        recomputed = std::max(recomputed, diff);
    }
    CHECK(worst == Catch::Approx(recomputed).margin(1e-15));

    CHECK(run_tool("verify " + fixture_path("hub_201.edges") + " --runs 5 --watch 9999,3")
              .exit_code == 2);
    CHECK(run_tool("verify " + fixture_path("hub_201.edges") + " --runs 5 --watch fish")
              .exit_code == 2);
}

TEST_CASE("bench reports deterministic counters", "[cli]") {
    const std::string cmd = "bench " + fixture_path("skew_300.edges") +
                            " --scales 1,2 --reps 2 --generator cl --seed 9";
    const json doc = parse_report(run_tool(cmd));
    const json& rows = doc.at("outputs").at("rows");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].at("scale") == 1);
    CHECK(rows[1].at("scale") == 2);
    CHECK(rows[1].at("edges").get<std::uint64_t>() ==
          2 * rows[0].at("edges").get<std::uint64_t>());
    for (const json& row : rows) {
        CHECK(row.at("reps") == 2);
        CHECK(row.at("attempts").get<std::uint64_t>() >=
              row.at("insertions").get<std::uint64_t>());
        CHECK(row.at("attempts_per_insertion").get<double>() >= 1.0);
    }
    CHECK(doc.at("timing").at("rows").size() == 2);
    CHECK(doc.at("timing").contains("time_ratio_last_over_first"));

    const json again = parse_report(run_tool(cmd));
    CHECK(stripped(doc) == stripped(again));
}

TEST_CASE("--report writes the document to a file instead of stdout", "[cli]") {
    const fs::path report = scratch() / "stats_report.json";
    const std::string base = "stats " + fixture_path("skew_300.edges") + " --seed 4";
    const auto filed = run_tool(base + " --report " + report.string());
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.empty());

    const json from_file = json::parse(slurp(report));
    const json from_stdout = parse_report(run_tool(base));
    CHECK(stripped(from_file) == stripped(from_stdout));
}

TEST_CASE("every subcommand's report fits the published schema skeleton", "[cli]") {
    const json schema = json::parse(slurp(TCL_SCHEMA_PATH));
    std::vector<std::string> required;
    for (const json& key : schema.at("required")) required.push_back(key.get<std::string>());

    const json commands = schema.at("properties").at("command").at("enum");
    for (const char* name : {"fit", "generate", "stats", "compare", "verify", "bench"})
        CHECK(std::find(commands.begin(), commands.end(), json(name)) != commands.end());

    const std::string in = fixture_path("skew_300.edges");
    const fs::path out = scratch() / "schema_probe.edges";
    const std::vector<std::string> invocations{
        "fit " + in + " --samples 200 --max-iterations 5",
        "generate " + in + " -o " + out.string() + " --rho 0.2",
        "stats " + in,
        "compare " + in + " " + in,
        "verify " + in + " --runs 20 --watch 0,1",
        "bench " + in + " --scales 1 --reps 1",
    };
    for (const std::string& invocation : invocations) {
        INFO(invocation);
        const json doc = parse_report(run_tool(invocation));
        std::vector<std::string> keys;
        for (const auto& item : doc.items()) keys.push_back(item.key());
        std::vector<std::string> sorted_keys = keys, sorted_required = required;
        std::sort(sorted_keys.begin(), sorted_keys.end());
        std::sort(sorted_required.begin(), sorted_required.end());
        CHECK(sorted_keys == sorted_required); // additionalProperties: false
        CHECK(doc.at("timing").at("total_seconds").get<double>() >= 0.0);
    }
}
