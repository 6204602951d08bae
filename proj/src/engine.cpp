#include "splicekit/engine.hpp"

#include <algorithm>
#include <functional>

namespace splicekit {

const char* verdict_name(Verdict::Kind kind) {
    switch (kind) {
        case Verdict::Kind::Slice: return "slice";
        case Verdict::Kind::StronglyNegAmphichiral: return "strongly_negative_amphichiral";
        case Verdict::Kind::ConcordantToSnack: return "concordant_to_snack";
        case Verdict::Kind::RationallySlice: return "rationally_slice";
    }
    return "?";
}

const char* certificate_kind_name(Certificate::Kind kind) {
    switch (kind) {
        case Certificate::Kind::NoFixedEdges: return "no_fixed_edges";
        case Certificate::Kind::CoherentCut: return "coherent_edge_cut";
        case Certificate::Kind::UndirectedCut: return "undirected_edge_cut";
        case Certificate::Kind::IncoherentSinkCut: return "incoherent_sink_cut";
        case Certificate::Kind::IncoherentRootShortcut: return "incoherent_root_shortcut";
        case Certificate::Kind::CoherentRootShortcut: return "coherent_root_shortcut";
    }
    return "?";
}

namespace {

VertexId unique_fixed_vertex(const CompanionshipGraph& g, const AmphichiralAction& a) {
    auto fixed = a.fixed_vertices(g);
    if (fixed.size() != 1)
        fail(ErrorCode::HypothesesNotMet,
             "expected exactly one fixed vertex, found " + std::to_string(fixed.size()));
    return *fixed.begin();
}

void require_all_negative(const AmphichiralAction& a) {
    for (const auto& [name, sign] : a.external_signs)
        if (sign == +1)
            fail(ErrorCode::PositiveComponentPresent,
                 "external component '" + name + "' is orientation-preserved");
}

bool is_knot_link(const CompanionshipGraph& g) { return g.externals().size() == 1; }

// Rooted knot graphs get the knot shortcuts. Cut results are not renormalized,
// so recursion can produce one-boundary graphs with undirected seams or stale
// orientations that no longer point at the boundary piece; those run through
// the link case machinery instead.
bool is_rooted_knot(const CompanionshipGraph& g) {
    if (g.externals().size() != 1) return false;
    auto report = validate(g);
    return report.valid() && report.classification == GraphClass::KnotGraph;
}

// Pairwise linking and unknottedness of the given components of v, where the
// model determines them; nonzero linking or a knotted entry breaks the unlink
// hypothesis.
std::optional<std::string> unlink_data_violation(const Vertex& v, const std::vector<int>& idx) {
    if (!v.model) return std::nullopt;
    for (int i : idx) {
        auto unknot = v.model->unknotted_component(i);
        if (unknot && !*unknot)
            return "component '" + v.components[(size_t)i].id + "' of vertex '" + v.id +
                   "' is knotted";
    }
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b) {
            auto lk = v.model->linking(idx[a], idx[b]);
            if (lk && *lk != 0)
                return "components '" + v.components[(size_t)idx[a]].id + "' and '" +
                       v.components[(size_t)idx[b]].id + "' of vertex '" + v.id +
                       "' have linking number " + std::to_string(*lk);
        }
    return std::nullopt;
}

struct ChildInput {
    CompanionshipGraph graph;
    AmphichiralAction action;
};

struct Decomposition {
    std::vector<ChildInput> children;
    std::vector<std::string> empty_branches;  // deleted components whose remainder was empty
};

void push_after_delete(Decomposition& dec, const CompanionshipGraph& g,
                       const AmphichiralAction& a, const ExternalName& deleted) {
    DeleteResult del = delete_component(g, a, deleted);
    if (del.graph.externals().empty())
        dec.empty_branches.push_back(deleted);
    else
        dec.children.push_back({std::move(del.graph), std::move(del.action)});
}

int stored_sign(const AmphichiralAction& a, const EdgeId& e, const VertexId& at) {
    int s = a.edge_sign_at(e, at);
    if (s == 0)
        fail(ErrorCode::InvalidAction, "fixed edge '" + e + "' carries no sign at '" + at + "'");
    return s;
}

// Cut a coherently directed edge: the tail side inherits the reversed sign and is
// analyzed whole; the head side loses the (preserved) glued component.
Decomposition decompose_coherent(const CompanionshipGraph& g, const AmphichiralAction& a,
                                 const EdgeId& edge) {
    const Edge& e = g.edge(edge);
    CutResult cut = edge_cut(g, edge);
    Decomposition dec;
    int tail_sign = stored_sign(a, edge, e.direction.from);
    int head_sign = stored_sign(a, edge, e.direction.to);
    AmphichiralAction a1 = restrict_action(a, cut.side1, {{edge, tail_sign}});
    dec.children.push_back({cut.side1, std::move(a1)});
    AmphichiralAction a2 = restrict_action(a, cut.side2, {{edge, head_sign}});
    push_after_delete(dec, cut.side2, a2, edge);
    return dec;
}

// Cut a fixed undirected edge from its reversed endpoint; both sides come back
// verbatim and the preserved glued component is deleted.
Decomposition decompose_undirected(const CompanionshipGraph& g, const AmphichiralAction& a,
                                   const EdgeId& edge) {
    const Edge& e = g.edge(edge);
    CutResult cut = edge_cut(g, edge);
    int sign_a = stored_sign(a, edge, e.end_a);
    const CompanionshipGraph& neg_side = sign_a == -1 ? cut.side1 : cut.side2;
    const CompanionshipGraph& pos_side = sign_a == -1 ? cut.side2 : cut.side1;
    Decomposition dec;
    AmphichiralAction an = restrict_action(a, neg_side, {{edge, -1}});
    dec.children.push_back({neg_side, std::move(an)});
    AmphichiralAction ap = restrict_action(a, pos_side, {{edge, +1}});
    push_after_delete(dec, pos_side, ap, edge);
    return dec;
}

// Maximal subtree around `center` containing no fixed edges.
std::set<VertexId> fixed_edge_free_subtree(const CompanionshipGraph& g,
                                           const AmphichiralAction& a, const VertexId& center) {
    std::set<VertexId> out{center};
    std::vector<VertexId> queue{center};
    while (!queue.empty()) {
        VertexId cur = queue.back();
        queue.pop_back();
        for (const auto& eid : g.edges_at(cur)) {
            if (a.edge_fixed(eid)) continue;
            VertexId nb = g.edge(eid).other(cur);
            if (out.insert(nb).second) queue.push_back(nb);
        }
    }
    return out;
}

struct SinkDecomposition {
    std::set<VertexId> subtree;
    CompanionshipGraph center_graph;
    AmphichiralAction center_action;
    std::vector<EdgeId> boundary;  // sorted
    Decomposition outside;
};

SinkDecomposition decompose_sink(const CompanionshipGraph& g, const AmphichiralAction& a,
                                 const VertexId& center) {
    SinkDecomposition out;
    out.subtree = fixed_edge_free_subtree(g, a, center);

    for (const auto& [eid, e] : g.edges) {
        if (out.subtree.count(e.end_a) + out.subtree.count(e.end_b) != 1) continue;
        if (!a.edge_fixed(eid))
            fail(ErrorCode::HypothesesNotMet, "boundary edge '" + eid + "' is not fixed");
        if (!e.direction.directed || !e.incident(center) || e.direction.to != center)
            fail(ErrorCode::HypothesesNotMet,
                 "boundary edge '" + eid + "' must be directed into the central vertex");
        out.boundary.push_back(eid);
    }
    std::sort(out.boundary.begin(), out.boundary.end());
    if (out.boundary.empty())
        fail(ErrorCode::HypothesesNotMet, "central vertex has no incident fixed edge");

    auto [center_graph, cuts] = subtree_cut(g, out.subtree);
    std::map<ExternalName, int> fresh;
    for (const auto& eid : out.boundary) fresh[eid] = stored_sign(a, eid, center);
    out.center_graph = std::move(center_graph);
    out.center_action = restrict_action(a, out.center_graph, fresh);

    for (const auto& cut : cuts) {
        // The outside piece is the tail side: the boundary edge enters the subtree.
        const Edge& e = g.edge(cut.cut_edge);
        int tail_sign = stored_sign(a, cut.cut_edge, e.direction.from);
        AmphichiralAction ai = restrict_action(a, cut.side1, {{cut.cut_edge, tail_sign}});
        push_after_delete(out.outside, cut.side1, ai, cut.cut_edge);
    }
    return out;
}

// Complement pieces of the maximal coherent subtree, sorted by piece root id.
std::vector<ChildInput> properly_incoherent_pieces(const CompanionshipGraph& g,
                                                   const AmphichiralAction& a,
                                                   const std::set<VertexId>& gmax) {
    std::set<VertexId> outside;
    for (const auto& [vid, _] : g.vertices)
        if (!gmax.count(vid)) outside.insert(vid);
    std::map<VertexId, std::set<VertexId>> pieces;  // keyed by piece root
    std::set<VertexId> seen;
    for (const auto& start : outside) {
        if (seen.count(start)) continue;
        std::set<VertexId> piece{start};
        std::vector<VertexId> queue{start};
        while (!queue.empty()) {
            VertexId cur = queue.back();
            queue.pop_back();
            for (const auto& eid : g.edges_at(cur)) {
                VertexId nb = g.edge(eid).other(cur);
                if (outside.count(nb) && piece.insert(nb).second) queue.push_back(nb);
            }
        }
        seen.insert(piece.begin(), piece.end());
        VertexId root;
        for (const auto& vid : piece)
            for (const auto& eid : g.edges_at(vid))
                if (gmax.count(g.edge(eid).other(vid))) root = vid;
        if (root.empty()) fail(ErrorCode::InvalidInput, "complement piece has no cut edge");
        pieces[root] = std::move(piece);
    }
    std::vector<ChildInput> out;
    for (const auto& [root, piece] : pieces) {
        auto [piece_graph, cuts] = subtree_cut(g, piece);
        if (cuts.size() != 1)
            fail(ErrorCode::InvalidInput, "complement piece attaches through several edges");
        int sign = stored_sign(a, cuts.front().cut_edge, root);
        if (sign != -1)
            fail(ErrorCode::ImpossibleConfiguration,
                 "cut edge of piece rooted at '" + root + "' does not reverse the companion");
        AmphichiralAction ai = restrict_action(a, piece_graph, {{cuts.front().cut_edge, -1}});
        out.push_back({std::move(piece_graph), std::move(ai)});
    }
    return out;
}

// Guard kinds, mutually exclusive by construction: knot shortcuts take priority,
// then the link cases in their preference order.
Certificate::Kind expected_kind(const CompanionshipGraph& g, const AmphichiralAction& a) {
    if (is_rooted_knot(g)) {
        auto classes = classify_vertices(g, a);
        VertexId root = root_of(g);
        if (classes.at(root) == VertexCoherence::Incoherent)
            return Certificate::Kind::IncoherentRootShortcut;
        JsjStructure structure = decide_structure(g, a);
        if (structure == JsjStructure::TotallyCoherent)
            return a.fixed_edges(g).empty() ? Certificate::Kind::NoFixedEdges
                                            : Certificate::Kind::CoherentRootShortcut;
        if (structure == JsjStructure::ProperlyIncoherent)
            return Certificate::Kind::CoherentRootShortcut;
    }
    if (a.fixed_edges(g).empty()) return Certificate::Kind::NoFixedEdges;
    auto classes = classify_edges(g, a);
    bool any_coherent = false, any_undirected = false;
    for (const auto& [_, cls] : classes) {
        any_coherent |= cls == EdgeCoherence::CoherentlyDirected;
        any_undirected |= cls == EdgeCoherence::UndirectedFixed;
    }
    if (any_coherent) return Certificate::Kind::CoherentCut;
    if (any_undirected) return Certificate::Kind::UndirectedCut;
    return Certificate::Kind::IncoherentSinkCut;
}

VertexId pick_sink_vertex(const CompanionshipGraph& g, const AmphichiralAction& a) {
    for (const auto& [vid, _] : g.vertices) {  // smallest id first (map order)
        if (!a.vertex_fixed(vid)) continue;
        int fixed_incident = 0;
        bool all_entering = true;
        for (const auto& eid : g.edges_at(vid)) {
            if (!a.edge_fixed(eid)) continue;
            ++fixed_incident;
            const Edge& e = g.edge(eid);
            if (!e.direction.directed || e.direction.to != vid) all_entering = false;
        }
        if (fixed_incident > 0 && all_entering) return vid;
    }
    fail(ErrorCode::ImpossibleConfiguration,
         "no fixed vertex has all incident fixed edges entering it; the fixed subtree "
         "would be infinite or contain a loop");
}

struct Ctx {
    AnalysisOptions options;
    unsigned nodes = 0;
    void tick() {
        if (++nodes > options.node_budget)
            fail(ErrorCode::InvalidInput, "analysis node budget exceeded");
    }
};

AnalysisResult analyze_rec(const CompanionshipGraph& g, const AmphichiralAction& a, Ctx& ctx);

AnalysisResult analyze_cut_children(const CompanionshipGraph& g, Certificate::Kind kind,
                                    const EdgeId& edge, const Decomposition& dec, Ctx& ctx) {
    Complexity here = complexity(g);
    Certificate cert;
    cert.kind = kind;
    cert.edge = edge;
    cert.complexity_before = here;
    cert.empty_branches = dec.empty_branches;
    unsigned bound = 0;
    for (const auto& child : dec.children) {
        AnalysisResult sub = analyze_rec(child.graph, child.action, ctx);
        if (compare(sub.certificate.complexity_before, here) != Ordering::Less)
            fail(ErrorCode::ImpossibleConfiguration, "complexity did not decrease across a cut");
        bound += sub.verdict.kaw_bound;
        cert.children.push_back(std::move(sub.certificate));
    }
    cert.bound = bound;
    Verdict verdict;
    verdict.kind = bound == 0 ? Verdict::Kind::Slice : Verdict::Kind::RationallySlice;
    verdict.kaw_bound = bound;
    return {verdict, std::move(cert)};
}

AnalysisResult analyze_rec(const CompanionshipGraph& g, const AmphichiralAction& a, Ctx& ctx) {
    ctx.tick();
    require_all_negative(a);
    Complexity here = complexity(g);

    Certificate::Kind kind = expected_kind(g, a);
    switch (kind) {
        case Certificate::Kind::IncoherentRootShortcut: {
            Certificate cert;
            cert.kind = kind;
            cert.vertex = root_of(g);
            cert.complexity_before = here;
            cert.bound = 0;
            return {Verdict{Verdict::Kind::Slice, 0, {}}, std::move(cert)};
        }
        case Certificate::Kind::CoherentRootShortcut: {
            auto gmax = maximal_coherent_subtree(g, a);
            JsjStructure structure = decide_structure(g, a);
            Certificate cert;
            cert.kind = kind;
            cert.vertex = root_of(g);
            cert.subtree.assign(gmax.begin(), gmax.end());
            cert.complexity_before = here;
            cert.bound = 1;
            Verdict verdict;
            verdict.kaw_bound = 1;
            if (structure == JsjStructure::TotallyCoherent) {
                verdict.kind = Verdict::Kind::StronglyNegAmphichiral;
            } else {
                verdict.kind = Verdict::Kind::ConcordantToSnack;
                verdict.j0 = cert.subtree;
                for (auto& piece : properly_incoherent_pieces(g, a, gmax)) {
                    AnalysisResult sub = analyze_rec(piece.graph, piece.action, ctx);
                    if (sub.certificate.kind != Certificate::Kind::IncoherentRootShortcut)
                        fail(ErrorCode::ImpossibleConfiguration,
                             "complement piece does not have an incoherent root");
                    if (compare(sub.certificate.complexity_before, here) != Ordering::Less)
                        fail(ErrorCode::ImpossibleConfiguration,
                             "complexity did not decrease into a complement piece");
                    cert.children.push_back(std::move(sub.certificate));
                }
            }
            return {verdict, std::move(cert)};
        }
        case Certificate::Kind::NoFixedEdges: {
            VertexId v = unique_fixed_vertex(g, a);
            check_elementary(g, a, v);
            Certificate cert;
            cert.kind = kind;
            cert.vertex = v;
            cert.complexity_before = here;
            cert.bound = is_knot_link(g) ? 1 : 0;
            Verdict verdict;
            verdict.kind = Verdict::Kind::StronglyNegAmphichiral;
            verdict.kaw_bound = cert.bound;
            return {verdict, std::move(cert)};
        }
        case Certificate::Kind::CoherentCut: {
            auto classes = classify_edges(g, a);
            std::vector<EdgeId> candidates;
            for (const auto& [eid, cls] : classes)
                if (cls == EdgeCoherence::CoherentlyDirected) candidates.push_back(eid);
            std::sort(candidates.begin(), candidates.end());

            if (ctx.options.search && candidates.size() > 1) {
                std::optional<AnalysisResult> best;
                for (const auto& eid : candidates) {
                    AnalysisResult attempt = analyze_cut_children(
                        g, kind, eid, decompose_coherent(g, a, eid), ctx);
                    if (!best || attempt.verdict.kaw_bound < best->verdict.kaw_bound)
                        best = std::move(attempt);
                }
                return std::move(*best);
            }

            // Deterministic pick: the coherent edge minimizing the larger side's
            // complexity, ties by edge id.
            EdgeId pick = candidates.front();
            std::optional<Complexity> pick_key;
            for (const auto& eid : candidates) {
                CutResult cut = edge_cut(g, eid);
                Complexity c1 = complexity(cut.side1), c2 = complexity(cut.side2);
                Complexity larger = compare(c1, c2) == Ordering::Less ? c2 : c1;
                if (!pick_key || compare(larger, *pick_key) == Ordering::Less) {
                    pick = eid;
                    pick_key = larger;
                }
            }
            return analyze_cut_children(g, kind, pick, decompose_coherent(g, a, pick), ctx);
        }
        case Certificate::Kind::UndirectedCut: {
            auto classes = classify_edges(g, a);
            EdgeId pick;
            for (const auto& [eid, cls] : classes)
                if (cls == EdgeCoherence::UndirectedFixed) {
                    pick = eid;
                    break;  // smallest id (map order)
                }
            return analyze_cut_children(g, kind, pick, decompose_undirected(g, a, pick), ctx);
        }
        case Certificate::Kind::IncoherentSinkCut: {
            VertexId v = pick_sink_vertex(g, a);
            SinkDecomposition sink = decompose_sink(g, a, v);
            check_elementary(sink.center_graph, sink.center_action, v);
            AnalysisResult result = analyze_cut_children(g, kind, {}, sink.outside, ctx);
            result.certificate.vertex = v;
            result.certificate.subtree.assign(sink.subtree.begin(), sink.subtree.end());
            return result;
        }
    }
    fail(ErrorCode::InvalidInput, "unreachable analysis state");
}

// Recursion works on raw cut results, which may leave a one-boundary graph with
// undirected seams; the knot-orientation rules are therefore not enforced here.
void check_preconditions(const CompanionshipGraph& g, const AmphichiralAction& a) {
    auto report = validate(g);
    for (const auto& issue : report.issues)
        if (issue.rule != "knot_directed" && issue.rule != "knot_rooted")
            fail(ErrorCode::InvalidInput, "invalid graph: " + issue.detail);
    if (!g.connected()) fail(ErrorCode::SplitGraph, "analysis requires a non-split graph");
    require_valid_action(g, a);
    if (!is_reduced(g, a))
        fail(ErrorCode::NotReduced, "the action's permutation order is not a power of two; reduce first");
    require_all_negative(a);
}

}  // namespace

AnalysisResult analyze_link(const CompanionshipGraph& graph, const AmphichiralAction& action,
                            const AnalysisOptions& options) {
    auto report = validate(graph);
    if (!report.valid())
        fail(ErrorCode::InvalidInput, "invalid graph: " + report.issues.front().detail);
    check_preconditions(graph, action);
    Ctx ctx{options};
    return analyze_rec(graph, action, ctx);
}

AnalysisResult analyze_knot(const CompanionshipGraph& graph, const AmphichiralAction& action,
                            const AnalysisOptions& options) {
    if (graph.externals().size() != 1)
        fail(ErrorCode::NotAKnotGraph, "analyze_knot requires a knot graph");
    root_of(graph);
    return analyze_link(graph, action, options);
}

ElementaryReport check_elementary(const CompanionshipGraph& graph, const AmphichiralAction& action,
                                  const VertexId& vertex) {
    require_valid_action(graph, action);
    if (!graph.has_vertex(vertex)) fail(ErrorCode::InvalidInput, "unknown vertex '" + vertex + "'");
    if (!action.fixed_edges(graph).empty())
        fail(ErrorCode::HypothesesNotMet, "the action must fix no edges");
    VertexId v = unique_fixed_vertex(graph, action);
    if (v != vertex)
        fail(ErrorCode::HypothesesNotMet, "the unique fixed vertex is '" + v + "', not '" + vertex + "'");
    PQType pq = pq_type(action);
    if (pq.p < 1)
        fail(ErrorCode::HypothesesNotMet, "at least one component must be orientation-reversed");
    if (!deduce_unlink(graph, {v}))
        fail(ErrorCode::HypothesesNotMet,
             "some edge exits the fixed piece; the edge-indexed sublink is not deducibly an unlink");

    const Vertex& host = graph.vertex(v);
    // Preserved externals and edge components of v; the hypotheses make this an unlink.
    std::vector<int> unlink_part;
    int edge_components = 0;
    for (size_t i = 0; i < host.components.size(); ++i) {
        const auto& c = host.components[i];
        if (c.is_edge()) {
            unlink_part.push_back(static_cast<int>(i));
            ++edge_components;
        } else if (action.external_signs.at(c.id) == +1) {
            unlink_part.push_back(static_cast<int>(i));
        }
    }
    if (edge_components % 2 != 0)
        fail(ErrorCode::HypothesesNotMet,
             "a reduced action without fixed edges pairs up the edge components; found an odd count");

    ElementaryReport report;

    if (host.model && host.model->is_seifert()) {
        // A Seifert-fibered label S(p,q|X) can never be the unique fixed piece: its
        // fibered component links every companion nontrivially, and the remaining
        // cases reduce to an amphichiral cable, which does not exist.
        fail(ErrorCode::ImpossibleConfiguration,
             "seifert_label_excluded: the Seifert-fibered label S(" +
                 std::to_string(host.model->seifert().p) + "," +
                 std::to_string(host.model->seifert().q) +
                 "|X) cannot label the unique fixed piece of a reduced action");
    }

    if (host.model && host.model->is_keychain()) {
        report.branch = ElementaryReport::Branch::KeyChain;
        if (auto violation = unlink_data_violation(host, unlink_part))
            fail(ErrorCode::HypothesesNotMet, *violation);
        const ComponentRef& core = host.components.front();
        if (core.is_edge())
            fail(ErrorCode::ImpossibleConfiguration,
                 "keychain_core_invariant: the key-chain core links every ring and cannot lie "
                 "in a nontrivial component orbit");
        int core_sign = action.external_signs.at(core.id);
        report.core_reversed = core_sign == -1;
        if (report.core_reversed) {
            // Validated data already forces p = 1 here: a second reversed component
            // would be a ring with linking number 1 against the core.
            report.fix_is_two_points = true;
            report.notes.push_back("reversed core: half-turn construction with two fixed points");
        } else {
            report.fix_is_two_points = pq.p == 1;
            report.notes.push_back(pq.p == 1
                                       ? "preserved core on a two-component chain: rotated "
                                         "reflection with two fixed points"
                                       : "preserved core: planar reflection through the diagram");
        }
        return report;
    }

    bool hyperbolic = host.geometry.is_hyperbolic();
    if (!hyperbolic) {
        report.branch = ElementaryReport::Branch::Unlabeled;
        if (auto violation = unlink_data_violation(host, unlink_part))
            fail(ErrorCode::HypothesesNotMet, *violation);
        report.notes.push_back("Seifert-fibered piece without a decisive label; treated as a "
                               "key-chain form");
        return report;
    }

    report.branch = ElementaryReport::Branch::Hyperbolic;
    if (auto violation = unlink_data_violation(host, unlink_part))
        fail(ErrorCode::HypothesesNotMet, *violation);

    // Orbits of the edge components at v have the order of the piece symmetry.
    std::vector<size_t> orbit_sizes;
    {
        auto all = orbits(graph, action, OrbitItems::ComponentsOf, v);
        for (const auto& orbit : all)
            if (orbit.front().rfind("e:", 0) == 0) orbit_sizes.push_back(orbit.size());
    }
    long long inferred = 0;
    for (size_t s : orbit_sizes) {
        if (inferred == 0) inferred = static_cast<long long>(s);
        if (inferred != static_cast<long long>(s))
            fail(ErrorCode::ImpossibleConfiguration,
                 "orbit_size_mismatch: companion orbits at a hyperbolic piece all have the "
                 "order of its symmetry, found sizes " + std::to_string(inferred) + " and " +
                     std::to_string(s));
    }
    long long declared = 0;
    if (auto it = action.local_orders.find(v); it != action.local_orders.end())
        declared = it->second;
    if (declared != 0 && inferred != 0 && declared != inferred)
        fail(ErrorCode::ImpossibleConfiguration,
             "orbit_size_mismatch: declared symmetry order " + std::to_string(declared) +
                 " disagrees with companion orbit size " + std::to_string(inferred));
    long long effective = declared != 0 ? declared : (inferred != 0 ? inferred : 2);
    report.local_order = effective;

    if (effective >= 4) {
        if (pq.p >= 2)
            fail(ErrorCode::ImpossibleConfiguration,
                 "high_order_multiple_reversed: a symmetry of order >= 4 has a two-point fixed "
                 "set, but " + std::to_string(pq.p) + " reversed components give at least 4 "
                 "fixed points");
        if (pq.q >= 1)
            fail(ErrorCode::ImpossibleConfiguration,
                 "high_order_preserved_component: a symmetry of order >= 4 leaves only the "
                 "reversed axis component invariant");
        if (graph.vertices.size() > 1)
            fail(ErrorCode::ImpossibleConfiguration,
                 "high_order_satellite: extending an order >= 4 symmetry over the companions "
                 "forces a trivial link, impossible for a hyperbolic piece");
        report.notes.push_back("order >= 4 on a single declared piece; only the trivial link "
                               "supports this");
    }
    return report;
}

DeleteResult delete_component(const CompanionshipGraph& graph, const AmphichiralAction& action,
                              const ExternalName& external,
                              std::optional<double> replacement_volume) {
    VertexId host_id;
    for (const auto& [vid, v] : graph.vertices)
        if (v.find_external(external)) host_id = vid;
    if (host_id.empty())
        fail(ErrorCode::UnknownComponent, "no vertex carries external component '" + external + "'");

    DeleteResult out{graph, action};
    Vertex& host = out.graph.vertices.at(host_id);
    int idx = host.component_index(ComponentRef::external(external));
    host.components.erase(host.components.begin() + idx);

    if (host.model) {
        ModelLink& m = *host.model;
        if (m.is_keychain()) {
            if (idx == 0 || m.keychain().rings <= 1)
                host.model.reset();  // losing the core (or the last ring) leaves an unlink piece
            else
                std::get<KeyChainModel>(m.data).rings -= 1;
        } else if (m.is_seifert()) {
            auto& s = std::get<SeifertModel>(m.data);
            if (idx == 0) {
                host.model.reset();  // the fibered component is gone
            } else if (idx == 1 && s.star1) {
                s.star1 = false;
            } else {
                s.star2 = false;
            }
        } else {
            auto& nm = std::get<NamedModel>(m.data);
            if (nm.component_count <= 1) {
                host.model.reset();
            } else {
                nm.component_count -= 1;
                nm.name += "-del";
                if (nm.linking_matrix) {
                    auto& mat = *nm.linking_matrix;
                    mat.erase(mat.begin() + idx);
                    for (auto& row : mat) row.erase(row.begin() + idx);
                }
                if (nm.unknotted) nm.unknotted->erase(nm.unknotted->begin() + idx);
            }
        }
    }

    if (host.geometry.is_hyperbolic()) {
        std::string fresh =
            out.graph.atoms.derive_smaller(host.geometry.atom, "del-" + external, replacement_volume);
        host.geometry.atom = fresh;
    }

    out.action.external_signs.erase(external);

    Ordering relation = compare(complexity(out.graph), complexity(graph));
    if (relation == Ordering::Greater ||
        (graph.vertex(host_id).geometry.is_hyperbolic() && relation != Ordering::Less))
        fail(ErrorCode::MonotonicityViolated, "deletion did not decrease the complexity as required");
    return out;
}

namespace {

std::string node_path(const std::vector<size_t>& path) {
    std::string out = "root";
    for (size_t i : path) out += "." + std::to_string(i);
    return out;
}

std::optional<std::string> replay_node(const Certificate& cert, const CompanionshipGraph& g,
                                       const AmphichiralAction& a, std::vector<size_t>& path);

std::optional<std::string> replay_children(const Certificate& cert, const Decomposition& dec,
                                           const std::vector<std::string>& empty_branches,
                                           const CompanionshipGraph& g, std::vector<size_t>& path) {
    if (dec.empty_branches != empty_branches)
        return node_path(path) + ": recorded empty branches do not match the decomposition";
    if (dec.children.size() != cert.children.size())
        return node_path(path) + ": child count does not match the decomposition";
    Complexity here = complexity(g);
    unsigned bound = 0;
    for (size_t i = 0; i < dec.children.size(); ++i) {
        if (compare(complexity(dec.children[i].graph), here) != Ordering::Less)
            return node_path(path) + ": complexity does not strictly decrease into child " +
                   std::to_string(i);
        path.push_back(i);
        auto failure = replay_node(cert.children[i], dec.children[i].graph, dec.children[i].action, path);
        path.pop_back();
        if (failure) return failure;
        bound += cert.children[i].bound;
    }
    if (bound != cert.bound)
        return node_path(path) + ": recorded bound " + std::to_string(cert.bound) +
               " is not the sum of the children's bounds " + std::to_string(bound);
    return std::nullopt;
}

std::optional<std::string> replay_node(const Certificate& cert, const CompanionshipGraph& g,
                                       const AmphichiralAction& a, std::vector<size_t>& path) {
    try {
        check_preconditions(g, a);
        if (compare(cert.complexity_before, complexity(g)) != Ordering::Equal)
            return node_path(path) + ": recorded complexity does not match the graph";
        Certificate::Kind expected = expected_kind(g, a);
        if (expected != cert.kind)
            return node_path(path) + ": case '" + certificate_kind_name(cert.kind) +
                   "' does not apply here; the applicable case is '" +
                   certificate_kind_name(expected) + "'";
        switch (cert.kind) {
            case Certificate::Kind::IncoherentRootShortcut: {
                if (cert.bound != 0 || !cert.children.empty())
                    return node_path(path) + ": an incoherent-root node is a leaf with bound 0";
                return std::nullopt;
            }
            case Certificate::Kind::CoherentRootShortcut: {
                auto gmax = maximal_coherent_subtree(g, a);
                std::vector<VertexId> recorded(cert.subtree.begin(), cert.subtree.end());
                std::vector<VertexId> actual(gmax.begin(), gmax.end());
                if (recorded != actual)
                    return node_path(path) + ": recorded companion subtree is not the maximal "
                                             "coherent subtree";
                if (cert.bound != 1)
                    return node_path(path) + ": shortcut bound must be 1";
                JsjStructure structure = decide_structure(g, a);
                if (structure == JsjStructure::TotallyCoherent) {
                    if (!cert.children.empty())
                        return node_path(path) + ": a totally coherent node is a leaf";
                    return std::nullopt;
                }
                auto pieces = properly_incoherent_pieces(g, a, gmax);
                if (pieces.size() != cert.children.size())
                    return node_path(path) + ": child count does not match the complement pieces";
                Complexity here = complexity(g);
                for (size_t i = 0; i < pieces.size(); ++i) {
                    if (cert.children[i].kind != Certificate::Kind::IncoherentRootShortcut)
                        return node_path(path) + ": complement pieces certify through the "
                                                 "incoherent-root shortcut";
                    if (compare(complexity(pieces[i].graph), here) != Ordering::Less)
                        return node_path(path) + ": complexity does not strictly decrease into "
                                                 "a complement piece";
                    path.push_back(i);
                    auto failure =
                        replay_node(cert.children[i], pieces[i].graph, pieces[i].action, path);
                    path.pop_back();
                    if (failure) return failure;
                }
                return std::nullopt;
            }
            case Certificate::Kind::NoFixedEdges: {
                VertexId v = unique_fixed_vertex(g, a);
                if (cert.vertex != v)
                    return node_path(path) + ": recorded vertex is not the unique fixed vertex";
                check_elementary(g, a, v);
                unsigned expected_bound = is_knot_link(g) ? 1 : 0;
                if (cert.bound != expected_bound || !cert.children.empty())
                    return node_path(path) + ": elementary leaf must have bound " +
                           std::to_string(expected_bound) + " and no children";
                return std::nullopt;
            }
            case Certificate::Kind::CoherentCut: {
                auto classes = classify_edges(g, a);
                auto it = classes.find(cert.edge);
                if (it == classes.end() || it->second != EdgeCoherence::CoherentlyDirected)
                    return node_path(path) + ": recorded edge '" + cert.edge +
                           "' is not coherently directed";
                return replay_children(cert, decompose_coherent(g, a, cert.edge),
                                       cert.empty_branches, g, path);
            }
            case Certificate::Kind::UndirectedCut: {
                auto classes = classify_edges(g, a);
                auto it = classes.find(cert.edge);
                if (it == classes.end() || it->second != EdgeCoherence::UndirectedFixed)
                    return node_path(path) + ": recorded edge '" + cert.edge +
                           "' is not a fixed undirected edge";
                return replay_children(cert, decompose_undirected(g, a, cert.edge),
                                       cert.empty_branches, g, path);
            }
            case Certificate::Kind::IncoherentSinkCut: {
                VertexId v = cert.vertex;
                if (!g.has_vertex(v) || !a.vertex_fixed(v))
                    return node_path(path) + ": recorded central vertex is not fixed";
                SinkDecomposition sink = decompose_sink(g, a, v);
                std::vector<VertexId> actual(sink.subtree.begin(), sink.subtree.end());
                if (cert.subtree != actual)
                    return node_path(path) + ": recorded subtree is not the maximal fixed-edge-"
                                             "free subtree around the vertex";
                check_elementary(sink.center_graph, sink.center_action, v);
                return replay_children(cert, sink.outside, cert.empty_branches, g, path);
            }
        }
        return node_path(path) + ": unknown certificate kind";
    } catch (const SpliceError& e) {
        return node_path(path) + ": " + e.what();
    }
}

}  // namespace

ReplayOutcome replay(const Certificate& certificate, const CompanionshipGraph& graph,
                     const AmphichiralAction& action) {
    std::vector<size_t> path;
    auto failure = replay_node(certificate, graph, action, path);
    if (failure) return {false, *failure};
    return {true, {}};
}

}  // namespace splicekit
