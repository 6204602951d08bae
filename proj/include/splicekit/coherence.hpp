#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "splicekit/action.hpp"
#include "splicekit/graph.hpp"

namespace splicekit {

enum class EdgeCoherence { CoherentlyDirected, IncoherentlyDirected, UndirectedFixed, NotFixed };
enum class VertexCoherence { Coherent, Incoherent, Mixed, NotFixed };
enum class JsjStructure { TotallyCoherent, ProperlyIncoherent, Neither };

const char* edge_coherence_name(EdgeCoherence c);
const char* vertex_coherence_name(VertexCoherence c);
const char* structure_name(JsjStructure s);

// A fixed directed edge is coherently directed when the sign at its head is +1;
// the companion on the tail side then inherits the reversed orientation.
std::map<EdgeId, EdgeCoherence> classify_edges(const CompanionshipGraph& graph,
                                               const AmphichiralAction& action);

// Vertex classes over the incident fixed edges; vertices with none are Coherent.
std::map<VertexId, VertexCoherence> classify_vertices(const CompanionshipGraph& graph,
                                                      const AmphichiralAction& action);

// Unique maximal root-containing subtree in which every fixed vertex is coherent:
// growth from the root admits Coherent and NotFixed vertices and stops at
// Mixed/Incoherent ones. Empty iff the root is not coherent.
std::set<VertexId> maximal_coherent_subtree(const CompanionshipGraph& graph,
                                            const AmphichiralAction& action);

// TotallyCoherent iff the maximal coherent subtree is everything. Otherwise the
// complement splits into pieces; ProperlyIncoherent iff the root of every piece
// (the vertex next to the cut edge) is Incoherent within its piece — the cut edge
// itself is not counted, matching the piece's own graph after the cut.
JsjStructure decide_structure(const CompanionshipGraph& graph, const AmphichiralAction& action);

struct ConsistencyIssue {
    EdgeId edge;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<ConsistencyIssue> contradictions;
    bool consistent() const { return contradictions.empty(); }
    // Set when the fibered hypothesis upgrades the classification.
    std::optional<JsjStructure> concluded_structure;
};

// Nonzero winding on an incoherently directed fixed edge contradicts the zero
// linking number its two-component pattern link would be forced to have. For a
// declared fibered knot every fixed edge must carry nonzero winding, whence the
// structure is totally coherent.
ConsistencyReport check_fibered_consistency(const CompanionshipGraph& graph,
                                            const AmphichiralAction& action, bool fibered);

}  // namespace splicekit
