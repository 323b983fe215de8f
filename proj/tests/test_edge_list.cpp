#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dirhom/edge_list.hpp"

using namespace dirhom;

namespace {

ParsedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

}  // namespace

TEST_CASE("parse unweighted graphs with comments") {
    ParsedGraph p = parse("# layered digraph\n4 4\n0 2\n0 3\n\n1 2\n1 3\n");
    CHECK(!p.has_weights());
    CHECK(p.digraph.vertex_count() == 4);
    CHECK(p.digraph.arc_count() == 4);
}

TEST_CASE("parse weighted graphs preserving decimal text") {
    ParsedGraph p = parse("3 2\n0 1 0.50\n1 2 -1e-3\n");
    REQUIRE(p.has_weights());
    const WeightedDigraph& wg = *p.weighted;
    CHECK(wg.weights()[0].to_string() == "0.5");
    CHECK(wg.weights()[1].to_string() == "-0.001");
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t(0);
    };
    CHECK(line_of("") == 1);                                   // missing header
    CHECK(line_of("x y\n") == 1);                              // bad header
    CHECK(line_of("2 1\n0 5\n") == 2);                         // out of range
    CHECK(line_of("2 1\n0\n") == 2);                           // wrong arity
    CHECK(line_of("3 2\n0 1 0.5\n1 2\n") == 3);                // mixed weights
    CHECK(line_of("2 1\n0 0\n") == 2);                         // self loop
    CHECK(line_of("2 2\n0 1\n0 1\n") == 3);                    // duplicate
    CHECK(line_of("2 2\n0 1\n") == 2);                         // count mismatch
    CHECK(line_of("3 1\n0 1 zz\n") == 2);                      // bad weight
}

TEST_CASE("write and re-parse round trip") {
    Digraph g = mlp_digraph(MlpSpec({2, 2}));
    std::string text = write_edge_list(g);
    CHECK(text == "4 4\n0 2\n0 3\n1 2\n1 3\n");
    ParsedGraph back = parse(text);
    CHECK(back.digraph.arcs() == g.arcs());

    WeightedDigraph wg = WeightedDigraph::from_edge_list(
        2, {{{0, 1}, Decimal::parse("0.125")}});
    ParsedGraph wback = parse(write_edge_list(wg));
    REQUIRE(wback.has_weights());
    CHECK(wback.weighted->weights()[0] == Decimal::parse("0.125"));
}
