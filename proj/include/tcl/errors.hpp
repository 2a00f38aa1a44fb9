#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcl {

// Base class for every error this library throws on bad input or bad state.
// Callers that only want coarse handling can catch this one type.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation needed at least one node (or one edge) and the graph had none.
class empty_graph_error : public error {
public:
    using error::error;
};

// A neighbor draw was requested from a node of degree zero.
class isolated_node_error : public error {
public:
    using error::error;
};

// A generator exceeded its retry budget without placing enough edges; the
// weight sequence is too concentrated for rejection-style placement.
class graph_too_dense_error : public error {
public:
    using error::error;
};

// A per-edge computation was asked about a pair that is not an edge.
class not_an_edge_error : public error {
public:
    using error::error;
};

// An aggregate was requested over an empty collection of samples.
class empty_sample_error : public error {
public:
    using error::error;
};

// A distance between distributions was requested and one side had no points.
class empty_series_error : public error {
public:
    using error::error;
};

// Global clustering is undefined when no node has two neighbors.
class no_triples_error : public error {
public:
    using error::error;
};

// A file could not be opened, read, or written.
class io_error : public error {
public:
    using error::error;
};

// An edge-list line failed to parse; carries the 1-based line number.
class parse_error : public io_error {
public:
    parse_error(const std::string& source, std::uint64_t line, const std::string& what)
        : io_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::uint64_t line() const noexcept { return line_; }

private:
    std::uint64_t line_;
};

} // namespace tcl
