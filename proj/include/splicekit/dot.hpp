#pragma once

#include <optional>
#include <string>

#include "splicekit/action.hpp"
#include "splicekit/graph.hpp"

namespace splicekit {

// Graphviz rendering: solid arrows for directed edges, dashed lines for
// undirected ones, doubled arrowheads for coherently directed fixed edges when
// an action is supplied. Output is deterministic.
std::string export_dot(const CompanionshipGraph& graph,
                       const std::optional<AmphichiralAction>& action = std::nullopt);

}  // namespace splicekit
