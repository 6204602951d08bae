#pragma once

#include <set>
#include <vector>

#include "splicekit/graph.hpp"

namespace splicekit {

struct CutResult {
    CompanionshipGraph side1;  // tail side of a directed cut (returned verbatim)
    CompanionshipGraph side2;  // head side; edges in the DC set lose their direction
    EdgeId cut_edge;
    std::set<EdgeId> undirected_by_dc;
    // Original directions of the DC-undirected edges, kept so a cut can be undone
    // in memory. The JSON form carries only the id set.
    std::vector<Edge> dc_original;
};

// Splits a non-split graph along an edge. The cut edge becomes an external
// component named after the edge id on each side. For a directed edge the head
// side has every edge in the downward-consequence set undirected; directions are
// never reversed and undirected edges never become directed.
CutResult edge_cut(const CompanionshipGraph& graph, const EdgeId& edge);

// Downward consequences of a directed cut: directed edges of the head side whose
// start is reachable from the cut edge's head along directed paths. This is the
// documented approximation of the full definition; it satisfies the reachability
// condition those edges are known to obey, and the changes it makes do not affect
// any argument the engine replays.
std::set<EdgeId> downward_consequences(const CompanionshipGraph& head_side, const VertexId& head);

enum class SpliceDirection { Undirected, IntoFirst, IntoSecond };

struct SpliceResult {
    CompanionshipGraph graph;
    EdgeId new_edge;
    // Both glued host vertices Seifert fibered: the genuine pieces could merge;
    // the graft is performed as-is and the configuration flagged.
    bool seifert_seam = false;
};

SpliceResult splice(const CompanionshipGraph& side1, const ComponentRef& comp1,
                    const CompanionshipGraph& side2, const ComponentRef& comp2,
                    SpliceDirection direction);

// Cuts every edge with exactly one endpoint in the subtree, in edge-id order.
// Returns the subtree's graph and one CutResult per boundary edge.
std::pair<CompanionshipGraph, std::vector<CutResult>> subtree_cut(
    const CompanionshipGraph& graph, const std::set<VertexId>& subtree);

// True iff every edge leaving the subtree is directed into it, which licenses
// treating the subtree link's edge-indexed components as an unlink.
bool deduce_unlink(const CompanionshipGraph& graph, const std::set<VertexId>& subtree);

// Induced graph on a vertex set; boundary edges become externals named after the
// edge ids with the given signs (0 = unassigned).
CompanionshipGraph induced_subgraph(const CompanionshipGraph& graph,
                                    const std::set<VertexId>& keep);

}  // namespace splicekit
