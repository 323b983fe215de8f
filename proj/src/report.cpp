#include "dirhom/report.hpp"

#include <iomanip>
#include <sstream>

#include "dirhom/errors.hpp"

namespace dirhom {

std::string to_string(HomologyKind kind) { return kind == HomologyKind::path ? "path" : "dfc"; }

HomologyKind homology_kind_from_string(const std::string& s) {
    if (s == "path") return HomologyKind::path;
    if (s == "dfc") return HomologyKind::dfc;
    throw std::invalid_argument("unknown homology kind: " + s);
}

nlohmann::json summary_to_json(const HomologySummary& summary, double wall_time_seconds) {
    nlohmann::json degrees = nlohmann::json::array();
    for (std::size_t p = 0; p < summary.degrees.size(); ++p) {
        const DegreeData& d = summary.degrees[p];
        degrees.push_back({{"degree", p},
                           {"dim_allowed", d.dim_allowed},
                           {"dim_omega", d.dim_omega},
                           {"rank_boundary", d.rank_boundary},
                           {"betti", d.betti}});
    }
    return nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"kind", to_string(summary.kind)},
                          {"field", summary.field.name()},
                          {"reduced", summary.reduced},
                          {"empty_graph", summary.empty_graph},
                          {"max_degree", summary.max_degree},
                          {"degrees", degrees},
                          {"betti", summary.betti_vector()},
                          {"wall_time_seconds", wall_time_seconds}};
}

HomologySummary summary_from_json(const nlohmann::json& doc) {
    try {
        if (doc.at("schema_version").get<int>() != kReportSchemaVersion)
            throw ParseError(1, "unsupported schema_version");
        HomologySummary s;
        s.kind = homology_kind_from_string(doc.at("kind").get<std::string>());
        s.field = FieldSpec::parse(doc.at("field").get<std::string>());
        s.reduced = doc.at("reduced").get<bool>();
        s.empty_graph = doc.at("empty_graph").get<bool>();
        s.max_degree = doc.at("max_degree").get<int>();
        for (const auto& row : doc.at("degrees")) {
            DegreeData d;
            d.dim_allowed = row.at("dim_allowed").get<Index>();
            d.dim_omega = row.at("dim_omega").get<Index>();
            d.rank_boundary = row.at("rank_boundary").get<Index>();
            d.betti = row.at("betti").get<Index>();
            s.degrees.push_back(d);
        }
        return s;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(1, std::string("malformed report: ") + e.what());
    }
}

std::string render_text_report(const HomologySummary& summary, double wall_time_seconds) {
    std::ostringstream out;
    out << (summary.kind == HomologyKind::path ? "path homology" : "directed flag homology")
        << " (" << (summary.reduced ? "reduced" : "non-reduced") << ", field "
        << summary.field.name() << ")\n";
    if (summary.empty_graph) out << "note: empty graph\n";
    out << "degree  dim_chains  dim_invariant  rank_boundary  betti\n";
    for (std::size_t p = 0; p < summary.degrees.size(); ++p) {
        const DegreeData& d = summary.degrees[p];
        out << std::left << std::setw(8) << p << std::setw(12) << d.dim_allowed << std::setw(15)
            << d.dim_omega << std::setw(15) << d.rank_boundary << d.betti << '\n';
    }
    out << "betti = [";
    for (std::size_t p = 0; p < summary.degrees.size(); ++p)
        out << (p ? ", " : "") << summary.degrees[p].betti;
    out << "]\n";
    out << "wall_time_seconds = " << wall_time_seconds << '\n';
    return out.str();
}

}  // namespace dirhom
