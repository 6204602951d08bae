#include "splicekit/action.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace splicekit {

VertexId AmphichiralAction::image(const VertexId& v) const {
    auto it = vertex_perm.find(v);
    return it == vertex_perm.end() ? v : it->second;
}

EdgeId AmphichiralAction::edge_image(const EdgeId& e) const {
    auto it = edge_perm.find(e);
    return it == edge_perm.end() ? e : it->second;
}

int AmphichiralAction::edge_sign_at(const EdgeId& e, const VertexId& v) const {
    auto it = edge_signs.find(e);
    if (it == edge_signs.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
}

std::set<VertexId> AmphichiralAction::fixed_vertices(const CompanionshipGraph& g) const {
    std::set<VertexId> out;
    for (const auto& [vid, _] : g.vertices)
        if (vertex_fixed(vid)) out.insert(vid);
    return out;
}

std::set<EdgeId> AmphichiralAction::fixed_edges(const CompanionshipGraph& g) const {
    std::set<EdgeId> out;
    for (const auto& [eid, _] : g.edges)
        if (edge_fixed(eid)) out.insert(eid);
    return out;
}

PQType pq_type(const AmphichiralAction& action) {
    PQType pq;
    for (const auto& [_, sign] : action.external_signs) {
        if (sign == -1) pq.p++;
        if (sign == +1) pq.q++;
    }
    return pq;
}

namespace {

// Entries may omit fixed points; the completed map must be a bijection of `domain`.
bool is_permutation_of(const std::map<std::string, std::string>& perm,
                       const std::set<std::string>& domain) {
    for (const auto& [from, to] : perm)
        if (!domain.count(from) || !domain.count(to)) return false;
    std::set<std::string> image;
    for (const auto& d : domain) {
        auto it = perm.find(d);
        if (!image.insert(it == perm.end() ? d : it->second).second) return false;
    }
    return image.size() == domain.size();
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

long long odd_part(long long n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace

ValidationReport validate_action(const CompanionshipGraph& graph, const AmphichiralAction& action) {
    ValidationReport report;
    auto& issues = report.issues;
    report.classification = validate(graph).classification;

    std::set<std::string> vertex_ids, edge_ids;
    for (const auto& [vid, _] : graph.vertices) vertex_ids.insert(vid);
    for (const auto& [eid, _] : graph.edges) edge_ids.insert(eid);

    if (!is_permutation_of(action.vertex_perm, vertex_ids))
        issues.push_back({"vertex_permutation", "vertex map is not a permutation of the vertex set"});
    if (!is_permutation_of(action.edge_perm, edge_ids))
        issues.push_back({"edge_permutation", "edge map is not a permutation of the edge set"});
    if (!issues.empty()) return report;

    // Incidence and direction equivariance.
    for (const auto& [eid, e] : graph.edges) {
        EdgeId img = action.edge_image(eid);
        const Edge& f = graph.edge(img);
        VertexId ia = action.image(e.end_a), ib = action.image(e.end_b);
        bool ends_ok = (ia == f.end_a && ib == f.end_b) || (ia == f.end_b && ib == f.end_a);
        if (!ends_ok)
            issues.push_back({"incidence_equivariance",
                              "edge '" + eid + "' maps to '" + img + "' but endpoints do not correspond"});
        if (e.direction.directed != f.direction.directed)
            issues.push_back({"direction_equivariance",
                              "edge '" + eid + "' and its image '" + img + "' disagree on directedness"});
        else if (e.direction.directed &&
                 (action.image(e.direction.from) != f.direction.from ||
                  action.image(e.direction.to) != f.direction.to))
            issues.push_back({"direction_equivariance",
                              "edge '" + eid + "' direction is not carried to its image '" + img + "'"});
    }

    // Geometry is preserved (the mirror of a hyperbolic piece has the same volume).
    for (const auto& [vid, v] : graph.vertices) {
        const Vertex& w = graph.vertex(action.image(vid));
        if (v.geometry.kind != w.geometry.kind ||
            (v.geometry.is_hyperbolic() && v.geometry.atom != w.geometry.atom))
            issues.push_back({"geometry_equivariance",
                              "vertex '" + vid + "' maps to '" + w.id + "' with different geometry"});
    }

    // Externals: all fixed, all signed with +-1, hosted at fixed vertices.
    auto externals = graph.externals();
    for (const auto& [name, host] : externals) {
        auto it = action.external_signs.find(name);
        if (it == action.external_signs.end())
            issues.push_back({"external_signed", "external component '" + name + "' carries no sign"});
        else if (it->second != 1 && it->second != -1)
            issues.push_back({"external_signed", "external component '" + name + "' has sign outside {-1,+1}"});
        if (!action.vertex_fixed(host))
            issues.push_back({"boundary_vertex_fixed",
                              "vertex '" + host + "' carries an external component and must be fixed"});
    }
    for (const auto& [name, _] : action.external_signs)
        if (!externals.count(name))
            issues.push_back({"external_signed", "sign given for unknown external '" + name + "'"});

    // Fixed edges: endpoints fixed; signs present on exactly the fixed edges,
    // keyed by the two endpoints, and multiplying to -1.
    auto fixed_e = action.fixed_edges(graph);
    for (const auto& eid : fixed_e) {
        const Edge& e = graph.edge(eid);
        if (!action.vertex_fixed(e.end_a) || !action.vertex_fixed(e.end_b))
            issues.push_back({"fixed_edge_endpoints",
                              "edge '" + eid + "' is fixed so both endpoints must be fixed"});
        auto it = action.edge_signs.find(eid);
        if (it == action.edge_signs.end()) {
            issues.push_back({"edge_unsigned", "fixed edge '" + eid + "' carries no sign pair"});
            continue;
        }
        const auto& signs = it->second;
        if (signs.size() != 2 || !signs.count(e.end_a) || !signs.count(e.end_b)) {
            issues.push_back({"edge_signed",
                              "signs of edge '" + eid + "' must be keyed by its two endpoints"});
            continue;
        }
        int sa = signs.at(e.end_a), sb = signs.at(e.end_b);
        if ((sa != 1 && sa != -1) || (sb != 1 && sb != -1))
            issues.push_back({"edge_signed", "signs of edge '" + eid + "' must be in {-1,+1}"});
        else if (sa * sb != -1)
            issues.push_back({"edge_sign_product",
                              "signs of fixed edge '" + eid + "' must multiply to -1"});
    }
    for (const auto& [eid, _] : action.edge_signs)
        if (!fixed_e.count(eid))
            issues.push_back({"edge_signed", "sign pair given for non-fixed edge '" + eid + "'"});

    // No fixed edges: exactly one fixed vertex per connected component, carrying
    // all of that component's external components.
    for (const auto& comp : graph.connected_components()) {
        bool any_fixed_edge = false;
        std::set<VertexId> comp_set(comp.begin(), comp.end());
        for (const auto& eid : fixed_e)
            if (comp_set.count(graph.edge(eid).end_a)) any_fixed_edge = true;
        if (any_fixed_edge) continue;
        std::vector<VertexId> fixed_here;
        for (const auto& vid : comp)
            if (action.vertex_fixed(vid)) fixed_here.push_back(vid);
        if (fixed_here.size() != 1) {
            issues.push_back({"unique_fixed_vertex",
                              "an action without fixed edges must fix exactly one vertex (found " +
                                  std::to_string(fixed_here.size()) + ")"});
            continue;
        }
        for (const auto& [name, host] : externals)
            if (comp_set.count(host) && host != fixed_here.front())
                issues.push_back({"unique_fixed_vertex",
                                  "the unique fixed vertex must carry every external component ('" +
                                      name + "' lives elsewhere)"});
    }

    // Mirror labeling: a vertex's model corresponds to the mirror model of its image.
    for (const auto& [vid, v] : graph.vertices) {
        VertexId wid = action.image(vid);
        const Vertex& w = graph.vertex(wid);
        if (!v.model || !w.model) continue;
        if (vid == wid) {
            if (!v.model->self_mirror())
                issues.push_back({"mirror_label",
                                  "vertex '" + vid + "' is fixed but its model is not an "
                                  "(annotated) amphichiral link"});
            continue;
        }
        ModelLink expected = v.model->mirror();
        if (!(expected == *w.model))
            issues.push_back({"mirror_label",
                              "model of vertex '" + wid + "' is not the mirror of the model of '" +
                                  vid + "'"});
    }

    // Two orientation-reversed components of one fixed piece must have linking
    // number zero (lk = -lk under an orientation-reversing map fixing both).
    for (const auto& [vid, v] : graph.vertices) {
        if (!action.vertex_fixed(vid) || !v.model) continue;
        std::vector<int> reversed;
        for (size_t i = 0; i < v.components.size(); ++i) {
            const auto& c = v.components[i];
            if (c.is_external()) {
                auto it = action.external_signs.find(c.id);
                if (it != action.external_signs.end() && it->second == -1)
                    reversed.push_back(static_cast<int>(i));
            } else if (fixed_e.count(c.id) && action.edge_sign_at(c.id, vid) == -1) {
                reversed.push_back(static_cast<int>(i));
            }
        }
        for (size_t a = 0; a < reversed.size(); ++a)
            for (size_t b = a + 1; b < reversed.size(); ++b) {
                auto lk = v.model->linking(reversed[a], reversed[b]);
                if (lk && *lk != 0)
                    issues.push_back({"reversed_pair_linking",
                                      "vertex '" + vid + "': components '" +
                                          v.components[(size_t)reversed[a]].id + "' and '" +
                                          v.components[(size_t)reversed[b]].id +
                                          "' are both reversed but have linking number " +
                                          std::to_string(*lk)});
            }
    }

    // Declared mapping-class orders: fixed hyperbolic vertices, powers of two.
    for (const auto& [vid, order] : action.local_orders) {
        if (!graph.has_vertex(vid)) {
            issues.push_back({"local_order", "order declared for unknown vertex '" + vid + "'"});
            continue;
        }
        if (!action.vertex_fixed(vid))
            issues.push_back({"local_order", "order declared for non-fixed vertex '" + vid + "'"});
        if (!graph.vertex(vid).geometry.is_hyperbolic())
            issues.push_back({"local_order", "orders are declared on hyperbolic vertices only ('" + vid + "')"});
        if (!is_power_of_two(order))
            issues.push_back({"local_order", "order of '" + vid + "' must be a power of two"});
    }

    return report;
}

void require_valid_action(const CompanionshipGraph& graph, const AmphichiralAction& action) {
    auto report = validate_action(graph, action);
    if (!report.valid())
        fail(ErrorCode::InvalidAction, report.issues.front().rule + ": " + report.issues.front().detail);
}

long long action_order(const CompanionshipGraph& graph, const AmphichiralAction& action) {
    long long order = 1;
    auto cycle_orders = [&](const auto& ids, auto image) {
        std::set<std::string> seen;
        for (const auto& id : ids) {
            if (seen.count(id)) continue;
            long long len = 0;
            std::string cur = id;
            do {
                seen.insert(cur);
                cur = image(cur);
                ++len;
            } while (cur != id);
            order = std::lcm(order, len);
        }
    };
    std::vector<std::string> vids, eids;
    for (const auto& [vid, _] : graph.vertices) vids.push_back(vid);
    for (const auto& [eid, _] : graph.edges) eids.push_back(eid);
    cycle_orders(vids, [&](const std::string& v) { return action.image(v); });
    cycle_orders(eids, [&](const std::string& e) { return action.edge_image(e); });
    return order;
}

bool is_reduced(const CompanionshipGraph& graph, const AmphichiralAction& action) {
    if (!is_power_of_two(action_order(graph, action))) return false;
    for (const auto& [_, order] : action.local_orders)
        if (!is_power_of_two(order)) return false;
    return true;
}

ReduceResult reduce(const CompanionshipGraph& graph, const AmphichiralAction& action) {
    {
        // Unsigned fixed edges are fine here: reduce feeds annotate_signs.
        auto report = validate_action(graph, action);
        for (const auto& issue : report.issues)
            if (issue.rule != "edge_unsigned")
                fail(ErrorCode::InvalidAction, issue.rule + ": " + issue.detail);
    }
    long long order = action_order(graph, action);
    long long m = odd_part(order);
    ReduceResult out;
    if (m == 1) {
        out.action = action;
        return out;
    }
    auto power = [&](const std::map<std::string, std::string>& perm, const std::string& id) {
        std::string cur = id;
        for (long long i = 0; i < m; ++i) {
            auto it = perm.find(cur);
            cur = it == perm.end() ? cur : it->second;
        }
        return cur;
    };
    AmphichiralAction reduced;
    for (const auto& [vid, _] : graph.vertices) {
        VertexId img = power(action.vertex_perm, vid);
        if (img != vid) reduced.vertex_perm[vid] = img;
    }
    for (const auto& [eid, _] : graph.edges) {
        EdgeId img = power(action.edge_perm, eid);
        if (img != eid) reduced.edge_perm[eid] = img;
    }
    reduced.external_signs = action.external_signs;  // odd powers preserve (p,q)
    reduced.local_orders = action.local_orders;
    for (const auto& [eid, signs] : action.edge_signs)
        if (reduced.edge_image(eid) == eid) reduced.edge_signs[eid] = signs;  // eps^m = eps, m odd
    for (const auto& [eid, _] : graph.edges)
        if (reduced.edge_image(eid) == eid && !action.edge_fixed(eid)) out.newly_fixed.insert(eid);
    out.action = std::move(reduced);
    return out;
}

AmphichiralAction annotate_signs(const CompanionshipGraph& graph, const AmphichiralAction& action,
                                 const std::map<EdgeId, std::map<VertexId, int>>& signs) {
    std::set<EdgeId> unsigned_fixed;
    for (const auto& eid : action.fixed_edges(graph))
        if (!action.edge_signs.count(eid)) unsigned_fixed.insert(eid);
    for (const auto& [eid, _] : signs)
        if (!unsigned_fixed.count(eid))
            fail(ErrorCode::IncompleteAnnotation,
                 "edge '" + eid + "' is not an unsigned fixed edge");
    for (const auto& eid : unsigned_fixed)
        if (!signs.count(eid))
            fail(ErrorCode::IncompleteAnnotation, "no signs provided for fixed edge '" + eid + "'");

    AmphichiralAction out = action;
    for (const auto& [eid, pair] : signs) {
        const Edge& e = graph.edge(eid);
        if (pair.size() != 2 || !pair.count(e.end_a) || !pair.count(e.end_b))
            fail(ErrorCode::IncompleteAnnotation,
                 "signs of edge '" + eid + "' must be keyed by its two endpoints");
        int sa = pair.at(e.end_a), sb = pair.at(e.end_b);
        if ((sa != 1 && sa != -1) || (sb != 1 && sb != -1) || sa * sb != -1)
            fail(ErrorCode::SignProductViolation,
                 "signs of fixed edge '" + eid + "' must multiply to -1");
        out.edge_signs[eid] = pair;
    }
    require_valid_action(graph, out);
    return out;
}

std::vector<std::vector<std::string>> orbits(const CompanionshipGraph& graph,
                                             const AmphichiralAction& action, OrbitItems items,
                                             const VertexId& vertex) {
    std::vector<std::string> ids;
    std::function<std::string(const std::string&)> image;
    switch (items) {
        case OrbitItems::Vertices:
            for (const auto& [vid, _] : graph.vertices) ids.push_back(vid);
            image = [&](const std::string& v) { return action.image(v); };
            break;
        case OrbitItems::Edges:
            for (const auto& [eid, _] : graph.edges) ids.push_back(eid);
            image = [&](const std::string& e) { return action.edge_image(e); };
            break;
        case OrbitItems::ComponentsOf: {
            const Vertex& v = graph.vertex(vertex);
            if (!action.vertex_fixed(vertex))
                fail(ErrorCode::InvalidInput,
                     "component orbits are defined at fixed vertices only");
            for (const auto& c : v.components) ids.push_back((c.is_external() ? "x:" : "e:") + c.id);
            image = [&](const std::string& tagged) {
                if (tagged.rfind("x:", 0) == 0) return tagged;  // externals are fixed
                return "e:" + action.edge_image(tagged.substr(2));
            };
            break;
        }
    }
    std::set<std::string> seen;
    std::vector<std::vector<std::string>> out;
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids) {
        if (seen.count(id)) continue;
        std::vector<std::string> orbit;
        std::string cur = id;
        do {
            orbit.push_back(cur);
            seen.insert(cur);
            cur = image(cur);
        } while (cur != id);
        out.push_back(std::move(orbit));
    }
    return out;
}

AmphichiralAction restrict_action(const AmphichiralAction& action, const CompanionshipGraph& sub,
                                  const std::map<ExternalName, int>& fresh_external_signs) {
    AmphichiralAction out;
    for (const auto& [vid, _] : sub.vertices) {
        VertexId img = action.image(vid);
        if (!sub.has_vertex(img))
            fail(ErrorCode::InvalidAction, "vertex set is not invariant under the action");
        if (img != vid) out.vertex_perm[vid] = img;
    }
    for (const auto& [eid, _] : sub.edges) {
        EdgeId img = action.edge_image(eid);
        if (!sub.has_edge(img))
            fail(ErrorCode::InvalidAction, "edge set is not invariant under the action");
        if (img != eid) out.edge_perm[eid] = img;
        if (img == eid) {
            auto it = action.edge_signs.find(eid);
            if (it != action.edge_signs.end()) out.edge_signs[eid] = it->second;
        }
    }
    for (const auto& [name, host] : sub.externals()) {
        auto fresh = fresh_external_signs.find(name);
        if (fresh != fresh_external_signs.end()) {
            out.external_signs[name] = fresh->second;
        } else {
            auto it = action.external_signs.find(name);
            if (it != action.external_signs.end()) out.external_signs[name] = it->second;
        }
        (void)host;
    }
    for (const auto& [vid, order] : action.local_orders)
        if (sub.has_vertex(vid)) out.local_orders[vid] = order;
    return out;
}

}  // namespace splicekit
