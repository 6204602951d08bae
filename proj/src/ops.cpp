#include "splicekit/ops.hpp"

#include <algorithm>
#include <functional>

namespace splicekit {

namespace {

// Restrict a graph to `keep`. Edges with one endpoint outside become external
// components (named after the edge id) at their inside vertex; winding entries
// for removed edges are dropped; the atom registry is filtered.
CompanionshipGraph restrict_to(const CompanionshipGraph& graph, const std::set<VertexId>& keep) {
    CompanionshipGraph out;
    for (const auto& vid : keep) {
        Vertex v = graph.vertex(vid);
        for (auto& c : v.components) {
            if (!c.is_edge()) continue;
            const Edge& e = graph.edge(c.id);
            VertexId other = e.other(vid);
            if (!keep.count(other)) c = ComponentRef::external(c.id);
        }
        for (auto it = v.winding.begin(); it != v.winding.end();) {
            const Edge& e = graph.edge(it->first);
            if (!keep.count(e.end_a) || !keep.count(e.end_b))
                it = v.winding.erase(it);
            else
                ++it;
        }
        if (v.geometry.is_hyperbolic())
            out.atoms.insert({v.geometry.atom, graph.atoms.value(v.geometry.atom)});
        out.vertices.emplace(vid, std::move(v));
    }
    for (const auto& [eid, e] : graph.edges)
        if (keep.count(e.end_a) && keep.count(e.end_b)) out.edges.emplace(eid, e);
    return out;
}

std::set<VertexId> component_of(const CompanionshipGraph& graph, const VertexId& start,
                                const EdgeId& skip_edge) {
    std::set<VertexId> seen{start};
    std::vector<VertexId> queue{start};
    while (!queue.empty()) {
        VertexId cur = queue.back();
        queue.pop_back();
        for (const auto& eid : graph.edges_at(cur)) {
            if (eid == skip_edge) continue;
            VertexId nb = graph.edge(eid).other(cur);
            if (seen.insert(nb).second) queue.push_back(nb);
        }
    }
    return seen;
}

}  // namespace

std::set<EdgeId> downward_consequences(const CompanionshipGraph& head_side, const VertexId& head) {
    // Vertices reachable from the head along directed edges (zero-length included).
    std::set<VertexId> reach{head};
    std::vector<VertexId> queue{head};
    while (!queue.empty()) {
        VertexId cur = queue.back();
        queue.pop_back();
        for (const auto& eid : head_side.edges_at(cur)) {
            const Edge& e = head_side.edge(eid);
            if (!e.direction.directed || e.direction.from != cur) continue;
            if (reach.insert(e.direction.to).second) queue.push_back(e.direction.to);
        }
    }
    std::set<EdgeId> out;
    for (const auto& [eid, e] : head_side.edges)
        if (e.direction.directed && reach.count(e.direction.from)) out.insert(eid);
    return out;
}

CutResult edge_cut(const CompanionshipGraph& graph, const EdgeId& edge_id) {
    if (!graph.has_edge(edge_id)) fail(ErrorCode::UnknownEdge, "no edge '" + edge_id + "'");
    if (!graph.connected()) fail(ErrorCode::SplitGraph, "edge_cut requires a non-split graph");
    const Edge e = graph.edge(edge_id);

    VertexId tail = e.direction.directed ? e.direction.from : e.end_a;
    VertexId head = e.direction.directed ? e.direction.to : e.end_b;

    auto tail_set = component_of(graph, tail, edge_id);
    auto head_set = component_of(graph, head, edge_id);

    CutResult result;
    result.cut_edge = edge_id;
    result.side1 = restrict_to(graph, tail_set);
    result.side2 = restrict_to(graph, head_set);

    if (e.direction.directed) {
        result.undirected_by_dc = downward_consequences(result.side2, head);
        for (const auto& eid : result.undirected_by_dc) {
            result.dc_original.push_back(result.side2.edges.at(eid));
            result.side2.edges.at(eid).direction = EdgeDirection::undirected();
        }
    }
    return result;
}

SpliceResult splice(const CompanionshipGraph& side1, const ComponentRef& comp1,
                    const CompanionshipGraph& side2, const ComponentRef& comp2,
                    SpliceDirection direction) {
    if (!comp1.is_external() || !comp2.is_external())
        fail(ErrorCode::ComponentNotExternal, "splice glues external components");

    auto find_host = [](const CompanionshipGraph& g, const ComponentRef& c) -> VertexId {
        for (const auto& [vid, v] : g.vertices)
            if (v.find_external(c.id)) return vid;
        fail(ErrorCode::ComponentNotExternal,
             "no vertex carries external component '" + c.id + "'");
    };
    VertexId host1 = find_host(side1, comp1);
    VertexId host2 = find_host(side2, comp2);

    // An edge may point only into a side whose glued component is unknotted.
    auto check_unknotted = [&](const CompanionshipGraph& g, const VertexId& host,
                               const ComponentRef& c) {
        auto flag = component_unknotted(g.vertex(host), c);
        if (flag && !*flag)
            fail(ErrorCode::DirectionInconsistent,
                 "component '" + c.id + "' is knotted; the new edge may not point into its side");
    };
    if (direction == SpliceDirection::IntoFirst || direction == SpliceDirection::Undirected)
        check_unknotted(side1, host1, comp1);
    if (direction == SpliceDirection::IntoSecond || direction == SpliceDirection::Undirected)
        check_unknotted(side2, host2, comp2);

    SpliceResult out;
    out.new_edge = comp1.id == comp2.id ? comp1.id : comp1.id + "~" + comp2.id;

    for (const auto& [vid, v] : side1.vertices) {
        if (side2.vertices.count(vid))
            fail(ErrorCode::InvalidInput, "vertex id '" + vid + "' appears on both sides");
        out.graph.vertices.emplace(vid, v);
    }
    for (const auto& [vid, v] : side2.vertices) out.graph.vertices.emplace(vid, v);
    for (const auto& [eid, e] : side1.edges) out.graph.edges.emplace(eid, e);
    for (const auto& [eid, e] : side2.edges) {
        if (out.graph.edges.count(eid))
            fail(ErrorCode::InvalidInput, "edge id '" + eid + "' appears on both sides");
        out.graph.edges.emplace(eid, e);
    }
    for (const auto& [name, value] : side1.atoms.entries()) out.graph.atoms.insert({name, value});
    for (const auto& [name, value] : side2.atoms.entries()) out.graph.atoms.insert({name, value});

    if (out.graph.has_edge(out.new_edge))
        fail(ErrorCode::InvalidInput, "edge id '" + out.new_edge + "' already in use");

    Edge grafted;
    grafted.id = out.new_edge;
    grafted.end_a = host1;
    grafted.end_b = host2;
    switch (direction) {
        case SpliceDirection::Undirected: grafted.direction = EdgeDirection::undirected(); break;
        case SpliceDirection::IntoFirst: grafted.direction = EdgeDirection::from_to(host2, host1); break;
        case SpliceDirection::IntoSecond: grafted.direction = EdgeDirection::from_to(host1, host2); break;
    }
    out.graph.edges.emplace(grafted.id, grafted);

    auto replace = [&](const VertexId& host, const ComponentRef& c) {
        Vertex& v = out.graph.vertices.at(host);
        int idx = v.component_index(c);
        v.components[static_cast<size_t>(idx)] = ComponentRef::edge(out.new_edge);
    };
    replace(host1, comp1);
    replace(host2, comp2);

    out.seifert_seam = !out.graph.vertex(host1).geometry.is_hyperbolic() &&
                       !out.graph.vertex(host2).geometry.is_hyperbolic();
    return out;
}

std::pair<CompanionshipGraph, std::vector<CutResult>> subtree_cut(
    const CompanionshipGraph& graph, const std::set<VertexId>& subtree) {
    if (subtree.empty()) fail(ErrorCode::NotConnected, "subtree must be nonempty");
    for (const auto& vid : subtree)
        if (!graph.has_vertex(vid)) fail(ErrorCode::NotConnected, "unknown vertex '" + vid + "'");
    auto reach = component_of(graph, *subtree.begin(), "");
    std::set<VertexId> inside;
    {
        // connectivity within the induced subgraph
        std::set<VertexId> seen{*subtree.begin()};
        std::vector<VertexId> queue{*subtree.begin()};
        while (!queue.empty()) {
            VertexId cur = queue.back();
            queue.pop_back();
            for (const auto& eid : graph.edges_at(cur)) {
                VertexId nb = graph.edge(eid).other(cur);
                if (subtree.count(nb) && seen.insert(nb).second) queue.push_back(nb);
            }
        }
        inside = seen;
    }
    if (inside != subtree)
        fail(ErrorCode::NotConnected, "subtree does not induce a connected subgraph");

    std::vector<EdgeId> boundary;
    for (const auto& [eid, e] : graph.edges)
        if (subtree.count(e.end_a) + subtree.count(e.end_b) == 1) boundary.push_back(eid);
    std::sort(boundary.begin(), boundary.end());

    CompanionshipGraph working = graph;
    std::vector<CutResult> cuts;
    for (const auto& eid : boundary) {
        CutResult cut = edge_cut(working, eid);
        bool side1_has_subtree = cut.side1.vertices.count(*subtree.begin()) != 0;
        working = side1_has_subtree ? cut.side1 : cut.side2;
        cuts.push_back(std::move(cut));
    }
    return {std::move(working), std::move(cuts)};
}

bool deduce_unlink(const CompanionshipGraph& graph, const std::set<VertexId>& subtree) {
    if (subtree.empty()) fail(ErrorCode::NotConnected, "subtree must be nonempty");
    for (const auto& vid : subtree)
        if (!graph.has_vertex(vid)) fail(ErrorCode::NotConnected, "unknown vertex '" + vid + "'");
    std::set<VertexId> seen{*subtree.begin()};
    std::vector<VertexId> queue{*subtree.begin()};
    while (!queue.empty()) {
        VertexId cur = queue.back();
        queue.pop_back();
        for (const auto& eid : graph.edges_at(cur)) {
            VertexId nb = graph.edge(eid).other(cur);
            if (subtree.count(nb) && seen.insert(nb).second) queue.push_back(nb);
        }
    }
    if (seen != subtree) fail(ErrorCode::NotConnected, "subtree does not induce a connected subgraph");

    for (const auto& [eid, e] : graph.edges) {
        int ends_inside = (subtree.count(e.end_a) ? 1 : 0) + (subtree.count(e.end_b) ? 1 : 0);
        if (ends_inside != 1) continue;
        if (!e.direction.directed) return false;
        if (!subtree.count(e.direction.to)) return false;
    }
    return true;
}

CompanionshipGraph induced_subgraph(const CompanionshipGraph& graph,
                                    const std::set<VertexId>& keep) {
    return restrict_to(graph, keep);
}

}  // namespace splicekit
