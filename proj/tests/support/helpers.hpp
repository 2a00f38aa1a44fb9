#pragma once

// Shared machinery for the test suites: a scripted generator for pinning
// draw-by-draw behavior, fixture-file loading, and a harness that runs the
// CLI binary and captures its output.

#include <array>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <tcl/edge_list_io.hpp>
#include <tcl/graph.hpp>

namespace testing {

// URBG whose outputs are supplied up front.  uniform_index feeds a raw word
// straight through (word % n, no rejection for small words), so scripting
// the word `v` with v < n forces the draw to land on v; scripting 0 forces
// a coin flip to succeed and ~0 forces it to fail.
struct ScriptedEngine {
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    std::deque<result_type> words;

    ScriptedEngine(std::initializer_list<result_type> w) : words(w) {}

    result_type operator()() {
        if (words.empty()) throw std::logic_error("scripted engine ran out of words");
        const result_type w = words.front();
        words.pop_front();
        return w;
    }

    bool exhausted() const { return words.empty(); }
};

// A raw word that makes bernoulli() reject for any p < 1.
inline constexpr std::uint64_t kCoinFail = ~std::uint64_t{0};
// A raw word that makes bernoulli() accept for any p > 0.
inline constexpr std::uint64_t kCoinPass = 0;

inline std::string fixture_path(const std::string& name) {
    return std::string(TCL_FIXTURE_DIR) + "/" + name;
}

inline tcl::Graph load_fixture(const std::string& name) {
    return tcl::load_edge_list(fixture_path(name)).graph;
}

// Result of one CLI invocation.
struct ToolRun {
    int exit_code = -1;
    std::string output; // stdout only
};

// Runs the tclgen binary with the given argument string; stderr is dropped
// so diagnostics don't pollute byte-level output comparisons.
inline ToolRun run_tool(const std::string& args) {
    const std::string command = std::string(TCL_TOOL_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    ToolRun run;
    std::array<char, 4096> chunk;
    std::size_t got;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
        run.output.append(chunk.data(), got);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

inline double mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

} // namespace testing
