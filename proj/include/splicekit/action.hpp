#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "splicekit/graph.hpp"

namespace splicekit {

// Sign-decorated graph automorphism induced by an orientation-reversing map.
// Signs on a fixed edge are indexed by its endpoint vertices and multiply to -1;
// external components are fixed and carry the orientation sign of their link
// component (-1 reversed, +1 preserved).
struct AmphichiralAction {
    std::map<VertexId, VertexId> vertex_perm;
    std::map<EdgeId, EdgeId> edge_perm;
    std::map<EdgeId, std::map<VertexId, int>> edge_signs;
    std::map<ExternalName, int> external_signs;
    std::map<VertexId, long long> local_orders;  // fixed hyperbolic vertices only

    VertexId image(const VertexId& v) const;
    EdgeId edge_image(const EdgeId& e) const;
    bool vertex_fixed(const VertexId& v) const { return image(v) == v; }
    bool edge_fixed(const EdgeId& e) const { return edge_image(e) == e; }
    // Sign of a fixed edge at one endpoint; 0 if unannotated.
    int edge_sign_at(const EdgeId& e, const VertexId& v) const;

    std::set<VertexId> fixed_vertices(const CompanionshipGraph& g) const;
    std::set<EdgeId> fixed_edges(const CompanionshipGraph& g) const;
};

struct PQType {
    int p = 0;  // reversed externals
    int q = 0;  // preserved externals
    bool operator==(const PQType&) const = default;
};

PQType pq_type(const AmphichiralAction& action);

ValidationReport validate_action(const CompanionshipGraph& graph, const AmphichiralAction& action);

void require_valid_action(const CompanionshipGraph& graph, const AmphichiralAction& action);

// Order of the permutation (vertices and edges together).
long long action_order(const CompanionshipGraph& graph, const AmphichiralAction& action);

bool is_reduced(const CompanionshipGraph& graph, const AmphichiralAction& action);

struct ReduceResult {
    AmphichiralAction action;
    std::set<EdgeId> newly_fixed;  // fixed by the result but not the input; unsigned until annotated
};

// Raises the action to the odd part of its permutation order, so the result has
// order a power of two. External signs and signs of edges fixed both before and
// after are unchanged (odd powers preserve orientation behavior).
ReduceResult reduce(const CompanionshipGraph& graph, const AmphichiralAction& action);

// Completes a reduce() result: `signs` must cover exactly the unsigned fixed edges
// and each pair must multiply to -1.
AmphichiralAction annotate_signs(const CompanionshipGraph& graph, const AmphichiralAction& action,
                                 const std::map<EdgeId, std::map<VertexId, int>>& signs);

enum class OrbitItems { Vertices, Edges, ComponentsOf };

std::vector<std::vector<std::string>> orbits(const CompanionshipGraph& graph,
                                             const AmphichiralAction& action, OrbitItems items,
                                             const VertexId& vertex = {});

// Restriction of an action to a subgraph (vertex/edge sets must be closed under
// the permutations). Fresh externals created by cuts receive the given signs.
AmphichiralAction restrict_action(const AmphichiralAction& action, const CompanionshipGraph& sub,
                                  const std::map<ExternalName, int>& fresh_external_signs);

}  // namespace splicekit
