#include "splicekit/graph.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <cmath>
#include <numeric>
#include <sstream>

namespace splicekit {

namespace {

std::atomic<double> g_tolerance{1e-9};

std::string fmt_int(long long v) { return std::to_string(v); }

}  // namespace

double norm_tolerance() { return g_tolerance.load(); }
void set_norm_tolerance(double tol) { g_tolerance.store(tol); }

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::UnknownComponent: return "UnknownComponent";
        case ErrorCode::SplitGraph: return "SplitGraph";
        case ErrorCode::NotAKnotGraph: return "NotAKnotGraph";
        case ErrorCode::NoLinkingData: return "NoLinkingData";
        case ErrorCode::ComponentNotExternal: return "ComponentNotExternal";
        case ErrorCode::DirectionInconsistent: return "DirectionInconsistent";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::BoundNegative: return "BoundNegative";
        case ErrorCode::InvalidAction: return "InvalidAction";
        case ErrorCode::SignProductViolation: return "SignProductViolation";
        case ErrorCode::IncompleteAnnotation: return "IncompleteAnnotation";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::PositiveComponentPresent: return "PositiveComponentPresent";
        case ErrorCode::ImpossibleConfiguration: return "ImpossibleConfiguration";
        case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
        case ErrorCode::MonotonicityViolated: return "MonotonicityViolated";
        case ErrorCode::MissingWindingData: return "MissingWindingData";
        case ErrorCode::MissingAnnotation: return "MissingAnnotation";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::StepMismatch: return "StepMismatch";
    }
    return "UnknownError";
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Empty: return "empty";
        case GraphClass::KnotGraph: return "knot-graph";
        case GraphClass::LinkGraph: return "link-graph";
        case GraphClass::Split: return "split";
    }
    return "unknown";
}

void AtomRegistry::insert(const VolumeAtom& atom) {
    if (atom.name.empty()) fail(ErrorCode::InvalidInput, "atom name must be nonempty");
    if (!(atom.value > 0.0)) fail(ErrorCode::InvalidInput, "atom '" + atom.name + "' must have positive value");
    auto it = atoms_.find(atom.name);
    if (it != atoms_.end()) {
        if (std::abs(it->second - atom.value) > norm_tolerance())
            fail(ErrorCode::InvalidInput, "atom '" + atom.name + "' registered twice with different values");
        return;
    }
    atoms_.emplace(atom.name, atom.value);
}

double AtomRegistry::value(const std::string& name) const {
    auto it = atoms_.find(name);
    if (it == atoms_.end()) fail(ErrorCode::InvalidInput, "unknown atom '" + name + "'");
    return it->second;
}

std::string AtomRegistry::derive_smaller(const std::string& base, const std::string& hint,
                                         std::optional<double> replacement) {
    double old = value(base);
    double fresh = replacement.value_or(old * (1.0 - 1e-3));
    if (!(fresh > 0.0) || !(fresh < old - norm_tolerance()))
        fail(ErrorCode::MonotonicityViolated,
             "replacement volume for '" + base + "' must lie in (0, " + std::to_string(old) + ")");
    std::string name = base + "-" + hint;
    while (atoms_.count(name) != 0 && std::abs(atoms_.at(name) - fresh) > norm_tolerance())
        name += "'";
    atoms_.emplace(name, fresh);
    return name;
}

int ModelLink::component_count() const {
    if (is_keychain()) return keychain().rings + 1;
    if (is_seifert()) return seifert().component_count();
    return named().component_count;
}

bool ModelLink::hyperbolic() const { return is_named() && named().hyperbolic; }

bool ModelLink::self_mirror() const {
    if (is_keychain() || is_seifert()) return true;
    return named().amphichiral;
}

bool ModelLink::mirrored_flag() const {
    if (is_seifert()) return seifert().mirrored;
    if (is_named()) return named().mirrored;
    return false;
}

ModelLink ModelLink::mirror() const {
    ModelLink out = *this;
    if (out.is_seifert()) std::get<SeifertModel>(out.data).mirrored = !seifert().mirrored;
    if (out.is_named() && !named().amphichiral)
        std::get<NamedModel>(out.data).mirrored = !named().mirrored;
    return out;
}

std::optional<long long> ModelLink::linking(int a, int b) const {
    if (a == b) fail(ErrorCode::InvalidInput, "linking number requires distinct components");
    int n = component_count();
    if (a < 0 || b < 0 || a >= n || b >= n)
        fail(ErrorCode::InvalidInput, "component index out of range");
    if (a > b) std::swap(a, b);
    if (is_keychain()) return a == 0 ? 1 : 0;  // core links each ring once, rings are disjoint
    if (is_seifert()) {
        const auto& s = seifert();
        // Positions: S1, then S2 (if present), then S3. lk(S1,S2)=p, lk(S1,S3)=q, lk(S2,S3)=1.
        auto role = [&](int idx) -> int {
            if (idx == 0) return 1;
            if (idx == 1) return s.star1 ? 2 : 3;
            return 3;
        };
        int ra = role(a), rb = role(b);
        if (ra == 1 && rb == 2) return s.p;
        if (ra == 1 && rb == 3) return s.q;
        return 1;  // S2,S3
    }
    const auto& nm = named();
    if (!nm.linking_matrix) return std::nullopt;
    return (*nm.linking_matrix)[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

std::optional<bool> ModelLink::unknotted_component(int i) const {
    int n = component_count();
    if (i < 0 || i >= n) fail(ErrorCode::InvalidInput, "component index out of range");
    if (is_keychain()) return true;
    if (is_seifert()) {
        const auto& s = seifert();
        if (i == 0) return std::llabs(s.p) == 1 || std::llabs(s.q) == 1;  // torus link fiber
        return true;  // S2, S3 are cores of the two solid tori
    }
    const auto& nm = named();
    if (!nm.unknotted) return std::nullopt;
    return (*nm.unknotted)[static_cast<size_t>(i)];
}

int Vertex::component_index(const ComponentRef& ref) const {
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i].kind == ref.kind && components[i].id == ref.id)
            return static_cast<int>(i);
    }
    fail(ErrorCode::UnknownComponent,
         "vertex '" + id + "' has no component '" + ref.id + "'");
}

std::optional<int> Vertex::find_external(const ExternalName& name) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].is_external() && components[i].id == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Vertex::find_edge_component(const EdgeId& edge) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].is_edge() && components[i].id == edge) return static_cast<int>(i);
    return std::nullopt;
}

const Vertex& CompanionshipGraph::vertex(const VertexId& id) const {
    auto it = vertices.find(id);
    if (it == vertices.end()) fail(ErrorCode::InvalidInput, "unknown vertex '" + id + "'");
    return it->second;
}

const Edge& CompanionshipGraph::edge(const EdgeId& id) const {
    auto it = edges.find(id);
    if (it == edges.end()) fail(ErrorCode::UnknownEdge, "unknown edge '" + id + "'");
    return it->second;
}

std::map<ExternalName, VertexId> CompanionshipGraph::externals() const {
    std::map<ExternalName, VertexId> out;
    for (const auto& [vid, v] : vertices)
        for (const auto& c : v.components)
            if (c.is_external() && out.emplace(c.id, vid).second == false) {
                // duplicate names surface through validate(); keep first occurrence here
            }
    return out;
}

std::vector<EdgeId> CompanionshipGraph::edges_at(const VertexId& v) const {
    std::vector<EdgeId> out;
    for (const auto& [eid, e] : edges)
        if (e.incident(v)) out.push_back(eid);
    return out;
}

std::vector<std::vector<VertexId>> CompanionshipGraph::connected_components() const {
    std::map<VertexId, VertexId> parent;
    for (const auto& [vid, _] : vertices) parent[vid] = vid;
    std::function<VertexId(const VertexId&)> find = [&](const VertexId& x) -> VertexId {
        VertexId r = x;
        while (parent[r] != r) r = parent[r];
        VertexId c = x;
        while (parent[c] != r) { VertexId n = parent[c]; parent[c] = r; c = n; }
        return r;
    };
    for (const auto& [eid, e] : edges) {
        if (!vertices.count(e.end_a) || !vertices.count(e.end_b)) continue;
        VertexId ra = find(e.end_a), rb = find(e.end_b);
        if (ra != rb) parent[ra] = rb;
    }
    std::map<VertexId, std::vector<VertexId>> buckets;
    for (const auto& [vid, _] : vertices) buckets[find(vid)].push_back(vid);
    std::vector<std::vector<VertexId>> out;
    for (auto& [_, bucket] : buckets) {
        std::sort(bucket.begin(), bucket.end());
        out.push_back(bucket);
    }
    return out;
}

namespace {

void check_vertex_labels(const CompanionshipGraph& g, const Vertex& v,
                         std::vector<ValidationIssue>& issues) {
    if (v.geometry.is_hyperbolic() && !g.atoms.contains(v.geometry.atom))
        issues.push_back({"atom_registered",
                          "vertex '" + v.id + "' references unregistered atom '" + v.geometry.atom + "'"});
    if (!v.model) return;
    const ModelLink& m = *v.model;
    if (m.component_count() != static_cast<int>(v.components.size()))
        issues.push_back({"model_component_count",
                          "vertex '" + v.id + "': model has " + fmt_int(m.component_count()) +
                              " components but the vertex lists " + fmt_int((long long)v.components.size())});
    if (v.geometry.is_hyperbolic() && !m.hyperbolic())
        issues.push_back({"hyperbolic_model",
                          "vertex '" + v.id + "' is hyperbolic but its model is not"});
    if (!v.geometry.is_hyperbolic() && m.hyperbolic())
        issues.push_back({"hyperbolic_model",
                          "vertex '" + v.id + "' is Seifert fibered but its model is hyperbolic"});
    if (m.is_seifert()) {
        const auto& s = m.seifert();
        if (s.p == 0 || s.q == 0)
            issues.push_back({"seifert_parameters", "vertex '" + v.id + "': p and q must be nonzero"});
        else if (std::gcd(std::llabs(s.p), std::llabs(s.q)) != 1)
            issues.push_back({"seifert_atomic",
                              "vertex '" + v.id + "': gcd(|p|,|q|) must be 1 for an atomic piece"});
    }
    if (m.is_keychain() && m.keychain().rings < 1)
        issues.push_back({"keychain_parameters", "vertex '" + v.id + "': ring count must be positive"});
    if (m.is_named()) {
        const auto& nm = m.named();
        if (nm.component_count < 1)
            issues.push_back({"named_parameters", "vertex '" + v.id + "': component count must be positive"});
        if (nm.linking_matrix) {
            const auto& mat = *nm.linking_matrix;
            size_t n = static_cast<size_t>(nm.component_count);
            bool shape_ok = mat.size() == n;
            for (const auto& row : mat) shape_ok = shape_ok && row.size() == n;
            if (!shape_ok) {
                issues.push_back({"linking_matrix_shape",
                                  "vertex '" + v.id + "': linking matrix must be " + fmt_int((long long)n) +
                                      "x" + fmt_int((long long)n)});
            } else {
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (mat[i][j] != mat[j][i]) {
                            issues.push_back({"linking_matrix_symmetric",
                                              "vertex '" + v.id + "': linking matrix must be symmetric"});
                            i = n;
                            break;
                        }
            }
        }
        if (nm.unknotted && nm.unknotted->size() != static_cast<size_t>(nm.component_count))
            issues.push_back({"unknotted_flags",
                              "vertex '" + v.id + "': unknotted flags must cover every component"});
    }
}

}  // namespace

ValidationReport validate(const CompanionshipGraph& graph) {
    ValidationReport report;
    auto& issues = report.issues;

    if (graph.vertices.empty()) {
        issues.push_back({"nonempty", "a companionship graph has at least one vertex"});
        report.classification = GraphClass::Empty;
        return report;
    }

    // Edge endpoints and the edge-component housing invariant.
    std::map<EdgeId, int> edge_ref_count;
    for (const auto& [eid, e] : graph.edges) {
        if (e.end_a == e.end_b)
            issues.push_back({"edge_endpoints", "edge '" + eid + "' must join distinct vertices"});
        for (const VertexId* end : {&e.end_a, &e.end_b}) {
            if (!graph.has_vertex(*end)) {
                issues.push_back({"edge_endpoints", "edge '" + eid + "' references unknown vertex '" + *end + "'"});
                continue;
            }
            if (!graph.vertex(*end).find_edge_component(eid))
                issues.push_back({"edge_component_housing",
                                  "edge '" + eid + "' is not listed among the components of vertex '" + *end + "'"});
        }
        if (e.direction.directed) {
            bool ok = (e.direction.from == e.end_a && e.direction.to == e.end_b) ||
                      (e.direction.from == e.end_b && e.direction.to == e.end_a);
            if (!ok)
                issues.push_back({"edge_direction", "edge '" + eid + "' direction does not match its endpoints"});
        }
    }
    for (const auto& [vid, v] : graph.vertices) {
        std::set<std::string> seen;
        for (const auto& c : v.components) {
            if (!seen.insert((c.is_external() ? "x:" : "e:") + c.id).second)
                issues.push_back({"component_unique",
                                  "vertex '" + vid + "' lists component '" + c.id + "' twice"});
            if (c.is_edge()) {
                if (!graph.has_edge(c.id)) {
                    issues.push_back({"edge_component_housing",
                                      "vertex '" + vid + "' lists unknown edge '" + c.id + "'"});
                } else {
                    if (!graph.edge(c.id).incident(vid))
                        issues.push_back({"edge_component_housing",
                                          "vertex '" + vid + "' lists edge '" + c.id + "' which is not incident to it"});
                    edge_ref_count[c.id]++;
                }
            }
            if (c.is_external() && !(c.sign == 0 || c.sign == 1 || c.sign == -1))
                issues.push_back({"external_sign", "external '" + c.id + "' carries an invalid sign"});
        }
        for (const auto& [eid, _] : v.winding)
            if (!v.find_edge_component(eid))
                issues.push_back({"winding_keys",
                                  "vertex '" + vid + "' declares winding for '" + eid +
                                      "' which is not one of its edge components"});
        check_vertex_labels(graph, v, issues);
    }
    for (const auto& [eid, count] : edge_ref_count)
        if (count != 2)
            issues.push_back({"edge_component_housing",
                              "edge '" + eid + "' must appear in exactly its two endpoint vertices"});

    // Externals live in exactly one vertex each.
    std::map<ExternalName, int> external_count;
    for (const auto& [vid, v] : graph.vertices)
        for (const auto& c : v.components)
            if (c.is_external()) external_count[c.id]++;
    for (const auto& [name, count] : external_count)
        if (count != 1)
            issues.push_back({"external_unique",
                              "external component '" + name + "' must appear at exactly one vertex"});

    // Each connected component is a tree and carries at least one external.
    auto components = graph.connected_components();
    size_t edge_total = graph.edges.size();
    if (edge_total + components.size() != graph.vertices.size())
        issues.push_back({"tree", "each connected component must be a tree (|E| = |V| - #components)"});
    std::map<VertexId, size_t> comp_of;
    for (size_t i = 0; i < components.size(); ++i)
        for (const auto& vid : components[i]) comp_of[vid] = i;
    std::vector<int> comp_externals(components.size(), 0);
    for (const auto& [vid, v] : graph.vertices)
        for (const auto& c : v.components)
            if (c.is_external()) comp_externals[comp_of[vid]]++;
    for (size_t i = 0; i < components.size(); ++i)
        if (comp_externals[i] == 0)
            issues.push_back({"component_external",
                              "connected component containing '" + components[i].front() +
                                  "' carries no external component"});

    // Knot graphs: all edges directed, every maximal directed path ends at the root.
    size_t total_externals = external_count.size();
    if (components.size() == 1 && total_externals == 1) {
        report.classification = GraphClass::KnotGraph;
        VertexId root;
        for (const auto& [name, _] : graph.externals()) root = graph.externals().at(name);
        bool directions_ok = true;
        for (const auto& [eid, e] : graph.edges)
            if (!e.direction.directed) {
                issues.push_back({"knot_directed", "knot graphs have no undirected edges ('" + eid + "')"});
                directions_ok = false;
            }
        if (directions_ok && issues.empty()) {
            // BFS from the root; each edge must point toward the root side.
            std::map<VertexId, VertexId> toward_root;  // vertex -> next vertex on the path to root
            std::vector<VertexId> queue{root};
            std::set<VertexId> seen{root};
            while (!queue.empty()) {
                VertexId cur = queue.back();
                queue.pop_back();
                for (const auto& eid : graph.edges_at(cur)) {
                    VertexId nb = graph.edge(eid).other(cur);
                    if (seen.insert(nb).second) {
                        toward_root[nb] = cur;
                        queue.push_back(nb);
                    }
                }
            }
            for (const auto& [eid, e] : graph.edges) {
                VertexId parent_side =
                    toward_root.count(e.end_a) && toward_root.at(e.end_a) == e.end_b ? e.end_b : e.end_a;
                if (e.direction.to != parent_side)
                    issues.push_back({"knot_rooted",
                                      "edge '" + eid + "' must be directed toward the root vertex"});
            }
        }
    } else if (components.size() > 1) {
        report.classification = GraphClass::Split;
    } else {
        report.classification = GraphClass::LinkGraph;
    }

    // Undirected edges need unknotted glued components when models can tell.
    for (const auto& [eid, e] : graph.edges) {
        if (e.direction.directed) continue;
        for (const VertexId* end : {&e.end_a, &e.end_b}) {
            if (!graph.has_vertex(*end)) continue;
            const Vertex& v = graph.vertex(*end);
            auto idx = v.find_edge_component(eid);
            if (!idx || !v.model) continue;
            auto unknot = v.model->unknotted_component(*idx);
            if (unknot && !*unknot)
                issues.push_back({"undirected_unknotted",
                                  "undirected edge '" + eid + "' glues a knotted component at vertex '" +
                                      *end + "'"});
        }
    }

    return report;
}

VertexId root_of(const CompanionshipGraph& graph) {
    auto report = validate(graph);
    auto ext = graph.externals();
    if (ext.size() != 1)
        fail(ErrorCode::NotAKnotGraph,
             "expected exactly one external component, found " + fmt_int((long long)ext.size()));
    for (const auto& [eid, e] : graph.edges)
        if (!e.direction.directed)
            fail(ErrorCode::NotAKnotGraph, "edge '" + eid + "' is undirected");
    if (!report.valid())
        fail(ErrorCode::NotAKnotGraph, "graph is not a valid knot graph: " + report.issues.front().detail);
    return ext.begin()->second;
}

long long linking_number(const Vertex& vertex, const ComponentRef& a, const ComponentRef& b) {
    if (!vertex.model)
        fail(ErrorCode::NoLinkingData, "vertex '" + vertex.id + "' carries no model");
    int ia = vertex.component_index(a);
    int ib = vertex.component_index(b);
    auto lk = vertex.model->linking(ia, ib);
    if (!lk)
        fail(ErrorCode::NoLinkingData,
             "model of vertex '" + vertex.id + "' has no linking matrix");
    return *lk;
}

std::optional<bool> component_unknotted(const Vertex& vertex, const ComponentRef& ref) {
    if (!vertex.model) return std::nullopt;
    return vertex.model->unknotted_component(vertex.component_index(ref));
}

namespace {

bool same_vertex(const Vertex& a, const Vertex& b) {
    return a.id == b.id && a.geometry == b.geometry && a.components == b.components &&
           a.model == b.model && a.winding == b.winding;
}

}  // namespace

bool same_graph(const CompanionshipGraph& a, const CompanionshipGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    for (const auto& [vid, v] : a.vertices) {
        auto it = b.vertices.find(vid);
        if (it == b.vertices.end() || !same_vertex(v, it->second)) return false;
    }
    for (const auto& [eid, e] : a.edges) {
        auto it = b.edges.find(eid);
        if (it == b.edges.end()) return false;
        const Edge& f = it->second;
        bool ends_match = (e.end_a == f.end_a && e.end_b == f.end_b) ||
                          (e.end_a == f.end_b && e.end_b == f.end_a);
        if (!ends_match || !(e.direction == f.direction)) return false;
    }
    for (const auto& [name, value] : a.atoms.entries()) {
        if (!b.atoms.contains(name) || std::abs(b.atoms.value(name) - value) > norm_tolerance())
            return false;
    }
    return b.atoms.entries().size() == a.atoms.entries().size();
}

}  // namespace splicekit
