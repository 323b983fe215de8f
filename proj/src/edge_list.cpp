#include "dirhom/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace dirhom {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

long long parse_int(const std::string& token, std::size_t line_no, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + token + "'");
    }
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long vertex_count = -1, arc_count = -1;
    std::vector<Arc> arcs;
    std::vector<std::pair<Arc, Decimal>> weighted_arcs;
    bool weights_decided = false, has_weights = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokens_of(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        if (vertex_count < 0) {
            if (tokens.size() != 2) throw ParseError(line_no, "header must be 'V E'");
            vertex_count = parse_int(tokens[0], line_no, "vertex count");
            arc_count = parse_int(tokens[1], line_no, "arc count");
            if (vertex_count < 0 || arc_count < 0)
                throw ParseError(line_no, "negative count in header");
            continue;
        }

        if (tokens.size() != 2 && tokens.size() != 3)
            throw ParseError(line_no, "expected 'src dst' or 'src dst weight'");
        bool line_weighted = tokens.size() == 3;
        if (!weights_decided) {
            has_weights = line_weighted;
            weights_decided = true;
        } else if (line_weighted != has_weights) {
            throw ParseError(line_no, "weights must appear on every arc or none");
        }

        long long src = parse_int(tokens[0], line_no, "source vertex");
        long long dst = parse_int(tokens[1], line_no, "target vertex");
        if (src < 0 || src >= vertex_count || dst < 0 || dst >= vertex_count)
            throw ParseError(line_no, "vertex out of range");
        Arc arc{static_cast<VertexId>(src), static_cast<VertexId>(dst)};
        if (has_weights) {
            Decimal w;
            try {
                w = Decimal::parse(tokens[2]);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
            weighted_arcs.emplace_back(arc, std::move(w));
        }
        arcs.push_back(arc);
    }

    if (vertex_count < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'V E' header");
    if (static_cast<long long>(arcs.size()) != arc_count)
        throw ParseError(line_no, "header announced " + std::to_string(arc_count) +
                                      " arcs, file has " + std::to_string(arcs.size()));

    ParsedGraph parsed;
    try {
        parsed.digraph = Digraph::from_edge_list(static_cast<VertexId>(vertex_count), arcs);
        if (has_weights)
            parsed.weighted = WeightedDigraph::from_edge_list(static_cast<VertexId>(vertex_count),
                                                              weighted_arcs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    return parsed;
}

ParsedGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(1, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

std::string write_edge_list(const Digraph& g) {
    std::string out =
        std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + "\n";
    for (const Arc& a : g.arcs())
        out += std::to_string(a.first) + " " + std::to_string(a.second) + "\n";
    return out;
}

std::string write_edge_list(const WeightedDigraph& wg) {
    const Digraph& g = wg.digraph();
    std::string out =
        std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + "\n";
    for (std::size_t i = 0; i < g.arcs().size(); ++i)
        out += std::to_string(g.arcs()[i].first) + " " + std::to_string(g.arcs()[i].second) + " " +
               wg.weights()[i].to_string() + "\n";
    return out;
}

}  // namespace dirhom
