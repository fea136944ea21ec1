#pragma once

#include <string>

#include <json.hpp>

#include "dyer/classify.hpp"

namespace dyer {

inline constexpr int kReportSchemaVersion = 1;

// Stable JSON document for an analysis run; field order is fixed and
// infinite orders render as the literal string "infinity".
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

// Human-readable rendering with the same information.
std::string report_to_text(const AnalysisReport& report);

// Sub-documents of the report, also used by the narrower CLI subcommands.
nlohmann::ordered_json centre_to_json(const DyerGraph& g,
                                      const CentreDescription& centre);
nlohmann::ordered_json abelianisation_to_json(
    const DyerGraph& g, const AbelianisationDescription& ab);
nlohmann::ordered_json hyperbolicity_to_json(const DyerGraph& g,
                                             const HyperbolicityResult& r);

// Rebuilds the input graph from the "graph" echo of a report document.
DyerGraph graph_from_report_json(const nlohmann::json& document);

}  // namespace dyer
