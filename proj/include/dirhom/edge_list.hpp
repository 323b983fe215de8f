#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "dirhom/graph.hpp"

namespace dirhom {

/**
 * Edge-list text format: first data line "V E", then E lines "src dst" or
 * "src dst weight". Lines starting with '#' and blank lines are ignored.
 * Weights are all-or-none; their textual decimal form is preserved exactly.
 */
struct ParsedGraph {
    Digraph digraph;
    std::optional<WeightedDigraph> weighted;  // present when the file carried weights

    bool has_weights() const { return weighted.has_value(); }
};

ParsedGraph parse_edge_list(std::istream& in);          // throws ParseError
ParsedGraph parse_edge_list_file(const std::string& path);

std::string write_edge_list(const Digraph& g);
std::string write_edge_list(const WeightedDigraph& wg);

}  // namespace dirhom
