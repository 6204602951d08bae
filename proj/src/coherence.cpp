#include "splicekit/coherence.hpp"

#include <algorithm>

namespace splicekit {

const char* edge_coherence_name(EdgeCoherence c) {
    switch (c) {
        case EdgeCoherence::CoherentlyDirected: return "coherently-directed";
        case EdgeCoherence::IncoherentlyDirected: return "incoherently-directed";
        case EdgeCoherence::UndirectedFixed: return "undirected-fixed";
        case EdgeCoherence::NotFixed: return "not-fixed";
    }
    return "?";
}

const char* vertex_coherence_name(VertexCoherence c) {
    switch (c) {
        case VertexCoherence::Coherent: return "coherent";
        case VertexCoherence::Incoherent: return "incoherent";
        case VertexCoherence::Mixed: return "mixed";
        case VertexCoherence::NotFixed: return "not-fixed";
    }
    return "?";
}

const char* structure_name(JsjStructure s) {
    switch (s) {
        case JsjStructure::TotallyCoherent: return "totally-coherent";
        case JsjStructure::ProperlyIncoherent: return "properly-incoherent";
        case JsjStructure::Neither: return "neither";
    }
    return "?";
}

std::map<EdgeId, EdgeCoherence> classify_edges(const CompanionshipGraph& graph,
                                               const AmphichiralAction& action) {
    require_valid_action(graph, action);
    std::map<EdgeId, EdgeCoherence> out;
    for (const auto& [eid, e] : graph.edges) {
        if (!action.edge_fixed(eid)) {
            out[eid] = EdgeCoherence::NotFixed;
        } else if (!e.direction.directed) {
            out[eid] = EdgeCoherence::UndirectedFixed;
        } else {
            int head_sign = action.edge_sign_at(eid, e.direction.to);
            out[eid] = head_sign == +1 ? EdgeCoherence::CoherentlyDirected
                                       : EdgeCoherence::IncoherentlyDirected;
        }
    }
    return out;
}

namespace {

VertexCoherence vertex_class(const CompanionshipGraph& graph, const AmphichiralAction& action,
                             const std::map<EdgeId, EdgeCoherence>& edge_classes,
                             const VertexId& vid) {
    if (!action.vertex_fixed(vid)) return VertexCoherence::NotFixed;
    int coherent = 0, incoherent = 0;
    for (const auto& eid : graph.edges_at(vid)) {
        auto it = edge_classes.find(eid);
        if (it == edge_classes.end()) continue;
        if (it->second == EdgeCoherence::CoherentlyDirected) ++coherent;
        if (it->second == EdgeCoherence::IncoherentlyDirected) ++incoherent;
    }
    if (incoherent == 0) return VertexCoherence::Coherent;
    if (coherent == 0) return VertexCoherence::Incoherent;
    return VertexCoherence::Mixed;
}

void require_knot(const CompanionshipGraph& graph) {
    if (graph.externals().size() != 1 || !graph.connected())
        fail(ErrorCode::NotAKnotGraph, "defined for knot graphs only");
}

}  // namespace

std::map<VertexId, VertexCoherence> classify_vertices(const CompanionshipGraph& graph,
                                                      const AmphichiralAction& action) {
    auto edge_classes = classify_edges(graph, action);
    std::map<VertexId, VertexCoherence> out;
    for (const auto& [vid, _] : graph.vertices)
        out[vid] = vertex_class(graph, action, edge_classes, vid);
    return out;
}

std::set<VertexId> maximal_coherent_subtree(const CompanionshipGraph& graph,
                                            const AmphichiralAction& action) {
    require_knot(graph);
    VertexId root = root_of(graph);
    auto classes = classify_vertices(graph, action);
    if (classes.at(root) != VertexCoherence::Coherent) return {};
    std::set<VertexId> grown{root};
    std::vector<VertexId> queue{root};
    while (!queue.empty()) {
        VertexId cur = queue.back();
        queue.pop_back();
        for (const auto& eid : graph.edges_at(cur)) {
            VertexId nb = graph.edge(eid).other(cur);
            if (grown.count(nb)) continue;
            auto cls = classes.at(nb);
            if (cls == VertexCoherence::Coherent || cls == VertexCoherence::NotFixed) {
                grown.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    return grown;
}

JsjStructure decide_structure(const CompanionshipGraph& graph, const AmphichiralAction& action) {
    require_knot(graph);
    auto gmax = maximal_coherent_subtree(graph, action);
    if (gmax.size() == graph.vertices.size()) return JsjStructure::TotallyCoherent;

    auto edge_classes = classify_edges(graph, action);

    // Complement pieces and their roots (the vertex next to the cut edge).
    std::set<VertexId> outside;
    for (const auto& [vid, _] : graph.vertices)
        if (!gmax.count(vid)) outside.insert(vid);

    std::set<VertexId> seen;
    for (const auto& start : outside) {
        if (seen.count(start)) continue;
        std::set<VertexId> piece{start};
        std::vector<VertexId> queue{start};
        while (!queue.empty()) {
            VertexId cur = queue.back();
            queue.pop_back();
            for (const auto& eid : graph.edges_at(cur)) {
                VertexId nb = graph.edge(eid).other(cur);
                if (outside.count(nb) && piece.insert(nb).second) queue.push_back(nb);
            }
        }
        seen.insert(piece.begin(), piece.end());

        VertexId piece_root;
        if (gmax.empty()) {
            piece_root = root_of(graph);
        } else {
            for (const auto& vid : piece)
                for (const auto& eid : graph.edges_at(vid))
                    if (gmax.count(graph.edge(eid).other(vid))) piece_root = vid;
        }
        if (piece_root.empty())
            fail(ErrorCode::InvalidInput, "complement piece has no cut edge");

        // Root coherence within the piece: only fixed edges with both endpoints
        // inside count, matching the piece's own companionship graph.
        int coherent = 0, incoherent = 0;
        for (const auto& eid : graph.edges_at(piece_root)) {
            const Edge& e = graph.edge(eid);
            if (!piece.count(e.end_a) || !piece.count(e.end_b)) continue;
            auto cls = edge_classes.at(eid);
            if (cls == EdgeCoherence::CoherentlyDirected) ++coherent;
            if (cls == EdgeCoherence::IncoherentlyDirected) ++incoherent;
        }
        bool incoherent_root = incoherent > 0 && coherent == 0;
        if (!incoherent_root) return JsjStructure::Neither;
    }
    return JsjStructure::ProperlyIncoherent;
}

ConsistencyReport check_fibered_consistency(const CompanionshipGraph& graph,
                                            const AmphichiralAction& action, bool fibered) {
    require_knot(graph);
    auto edge_classes = classify_edges(graph, action);
    ConsistencyReport report;
    bool all_fixed_coherent = true;
    for (const auto& [eid, cls] : edge_classes) {
        if (cls == EdgeCoherence::NotFixed) continue;
        const Edge& e = graph.edge(eid);
        if (!e.direction.directed) continue;
        const Vertex& head = graph.vertex(e.direction.to);
        auto wind = head.winding.find(eid);
        if (cls == EdgeCoherence::IncoherentlyDirected) {
            all_fixed_coherent = false;
            if (wind != head.winding.end() && wind->second != 0)
                report.contradictions.push_back(
                    {eid, "incoherently directed but winding " + std::to_string(wind->second) +
                              " is nonzero; the two-component pattern link would be negative "
                              "amphichiral forcing linking number 0"});
        }
        if (fibered) {
            if (wind == head.winding.end()) {
                fail(ErrorCode::MissingWindingData,
                     "fibered check requires winding data on fixed edge '" + eid + "'");
            }
            if (wind->second == 0)
                report.contradictions.push_back(
                    {eid, "declared fibered but winding is zero; fibered satellites have "
                          "nonzero winding"});
        }
    }
    if (fibered && report.consistent() && all_fixed_coherent)
        report.concluded_structure = JsjStructure::TotallyCoherent;
    return report;
}

}  // namespace splicekit
