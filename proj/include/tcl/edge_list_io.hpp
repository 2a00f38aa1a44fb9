#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace tcl {

struct IngestOptions {
    // Accepted for symmetry with directed sources; every input line is
    // already treated as an undirected pair, so this is a no-op today.
    bool reflect = true;
    // Drop nodes whose (undirected, deduplicated) degree exceeds this, along
    // with their incident edges.  Applied once, after the full list is read.
    // 0 disables the cap.
    std::uint32_t degree_cap = 0;
    // Lines whose first non-blank character is this are skipped.
    char comment_prefix = '#';
};

// A graph plus the mapping from dense ids back to the labels that appeared
// in the file: labels[i] is the original id of node i.
struct LoadedGraph {
    Graph graph;
    std::vector<std::uint64_t> labels;
};

namespace detail {

inline bool parse_u64(std::string_view token, std::uint64_t& out) {
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace detail

// Reads whitespace-separated node-id pairs, one per line.  Blank lines and
// comment lines are skipped; anything else must be exactly two unsigned
// integers or the read fails with the offending line number.  Self-loops are
// dropped as edges, but a node mentioned only in a self-loop still enters
// the graph (isolated).  Duplicate pairs in either orientation collapse.
// Labels are then densified in ascending order, so the dense ids preserve
// the original ordering.
inline LoadedGraph read_edge_list(std::istream& in, const IngestOptions& opt = {},
                                  const std::string& source = "<stream>") {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw; // labeled pairs, loops included
    std::string line;
    std::uint64_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        const auto first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue; // blank
        if (view[first] == opt.comment_prefix) continue;

        std::uint64_t fields[2];
        std::size_t found = 0;
        std::size_t pos = first;
        while (pos < view.size()) {
            const auto stop = view.find_first_of(" \t\r", pos);
            const auto token = view.substr(pos, stop == std::string_view::npos ? stop : stop - pos);
            if (found == 2 || !detail::parse_u64(token, fields[found]))
                throw parse_error(source, lineno, "expected two node ids, got '" + line + "'");
            ++found;
            if (stop == std::string_view::npos) break;
            pos = view.find_first_not_of(" \t\r", stop);
            if (pos == std::string_view::npos) break;
        }
        if (found != 2)
            throw parse_error(source, lineno, "expected two node ids, got '" + line + "'");
        raw.emplace_back(fields[0], fields[1]);
    }
    if (in.bad()) throw io_error("read failure on " + source);

    // Every mentioned label gets a node, self-loop-only mentions included.
    std::vector<std::uint64_t> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    const auto dense = [&labels](std::uint64_t label) {
        return static_cast<node_id>(
            std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw)
        if (a != b) edges.emplace_back(dense(a), dense(b));

    if (opt.degree_cap > 0) {
        // One pass: measure deduplicated degrees, then drop every node over
        // the cap together with its edges, and renumber the survivors.
        Graph measured = build_graph(edges, labels.size());
        std::vector<bool> keep(labels.size());
        std::vector<node_id> renumber(labels.size());
        std::vector<std::uint64_t> kept_labels;
        node_id next = 0;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            keep[v] = measured.degree(static_cast<node_id>(v)) <= opt.degree_cap;
            if (keep[v]) {
                renumber[v] = next++;
                kept_labels.push_back(labels[v]);
            }
        }
        std::vector<Edge> kept_edges;
        kept_edges.reserve(edges.size());
        for (const Edge& e : edges)
            if (keep[e.first] && keep[e.second])
                kept_edges.emplace_back(renumber[e.first], renumber[e.second]);
        labels = std::move(kept_labels);
        edges = std::move(kept_edges);
    }

    return {build_graph(std::move(edges), labels.size()), std::move(labels)};
}

inline LoadedGraph load_edge_list(const std::string& path, const IngestOptions& opt = {}) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    return read_edge_list(in, opt, path);
}

// Writes one "a b" line per edge with a < b, ascending, using original
// labels when given.  Isolated nodes are preserved as a self-referential
// "x x" line — the reader drops the loop but keeps the node — so a write
// followed by a read reproduces the node set exactly.
inline void write_edge_list(const Graph& g, std::ostream& out,
                            const std::vector<std::uint64_t>* labels = nullptr) {
    const auto name = [labels](node_id v) {
        return labels ? (*labels)[v] : static_cast<std::uint64_t>(v);
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> lines;
    lines.reserve(g.edge_count());
    g.for_each_edge([&](node_id a, node_id b) {
        std::uint64_t la = name(a), lb = name(b);
        if (la > lb) std::swap(la, lb);
        lines.emplace_back(la, lb);
    });
    for (node_id v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0) lines.emplace_back(name(v), name(v));
    std::sort(lines.begin(), lines.end());

    for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
    if (!out) throw io_error("write failure on edge list stream");
}

inline void write_edge_list(const Graph& g, const std::string& path,
                            const std::vector<std::uint64_t>* labels = nullptr) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    write_edge_list(g, out, labels);
    out.flush();
    if (!out) throw io_error("write failure on " + path);
}

} // namespace tcl
