// Regenerates the committed fixture graphs under data/ from the builders in
// tests/support/fixtures.hpp.  Run with the output directory as the only
// argument; a drift-guard unit test fails if the committed files and the
// builders disagree.

#include <cstdio>
#include <string>

#include <tcl/edge_list_io.hpp>

#include "support/fixtures.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: make_fixtures <output-dir>\n");
        return 1;
    }
    const std::string dir = argv[1];
    try {
        tcl::write_edge_list(fixtures::fixture_1000(), dir + "/fixture_1000.edges");
        tcl::write_edge_list(fixtures::fixture_500(), dir + "/fixture_500.edges");
        tcl::write_edge_list(fixtures::skew_300(), dir + "/skew_300.edges");
        tcl::write_edge_list(fixtures::hub_201(), dir + "/hub_201.edges");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "make_fixtures: %s\n", e.what());
        return 1;
    }
    std::printf("wrote 4 fixtures to %s\n", dir.c_str());
    return 0;
}
