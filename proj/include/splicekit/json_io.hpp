#pragma once

#include <string>

#include <json.hpp>

#include "splicekit/action.hpp"
#include "splicekit/graph.hpp"
#include "splicekit/ops.hpp"

namespace splicekit {

using Json = nlohmann::ordered_json;

// Strict parsers: unknown fields are rejected.
CompanionshipGraph graph_from_json(const Json& doc);
CompanionshipGraph graph_from_string(const std::string& text);
Json graph_to_json(const CompanionshipGraph& graph);

AmphichiralAction action_from_json(const Json& doc);
AmphichiralAction action_from_string(const std::string& text);
Json action_to_json(const AmphichiralAction& action);

Json cut_result_to_json(const CutResult& cut);

Json validation_report_to_json(const ValidationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace splicekit
