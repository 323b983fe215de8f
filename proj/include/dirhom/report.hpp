#pragma once

#include <string>

#include "json.hpp"

#include "dirhom/summary.hpp"

namespace dirhom {

inline constexpr int kReportSchemaVersion = 1;

/**
 * Self-describing JSON document for a homology run. Parsing a serialized
 * report reproduces the summary exactly; wall time travels with the document
 * but is not part of the summary.
 */
nlohmann::json summary_to_json(const HomologySummary& summary, double wall_time_seconds);

HomologySummary summary_from_json(const nlohmann::json& doc);  // throws ParseError

std::string render_text_report(const HomologySummary& summary, double wall_time_seconds);

}  // namespace dirhom
