#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "splicekit/error.hpp"

namespace splicekit {

using VertexId = std::string;
using EdgeId = std::string;
using ExternalName = std::string;

// Registry of hyperbolic volume summands. Values are dimensionless volumes;
// equality of norm sums is decided with norm_tolerance().
struct VolumeAtom {
    std::string name;
    double value = 0.0;
};

class AtomRegistry {
public:
    void insert(const VolumeAtom& atom);
    bool contains(const std::string& name) const { return atoms_.count(name) != 0; }
    double value(const std::string& name) const;
    const std::map<std::string, double>& entries() const { return atoms_; }
    // Registers `base` shrunk by `ratio` (or an explicit replacement value) under a
    // fresh derived name; the replacement must be strictly smaller than the original.
    std::string derive_smaller(const std::string& base, const std::string& hint,
                               std::optional<double> replacement);

private:
    std::map<std::string, double> atoms_;
};

struct Geometry {
    enum class Kind { SeifertFibered, Hyperbolic };
    Kind kind = Kind::SeifertFibered;
    std::string atom;  // hyperbolic only

    static Geometry seifert() { return Geometry{Kind::SeifertFibered, {}}; }
    static Geometry hyperbolic(std::string atom_name) {
        return Geometry{Kind::Hyperbolic, std::move(atom_name)};
    }
    bool is_hyperbolic() const { return kind == Kind::Hyperbolic; }
    bool operator==(const Geometry&) const = default;
};

// Vertex labels. A key-chain link is a solid-torus core plus n parallel meridians;
// a Seifert link is S(p,q|X) with the standard fibered component S1 and the optional
// cores S2, S3; anything else ships as a named model with declared data.
struct KeyChainModel {
    int rings = 1;  // component count = rings + 1, core first
    bool operator==(const KeyChainModel&) const = default;
};

struct SeifertModel {
    long long p = 1;
    long long q = 1;
    bool star1 = false;  // S2 present
    bool star2 = false;  // S3 present
    bool mirrored = false;
    int component_count() const { return 1 + (star1 ? 1 : 0) + (star2 ? 1 : 0); }
    bool operator==(const SeifertModel&) const = default;
};

struct NamedModel {
    std::string name;
    int component_count = 1;
    bool hyperbolic = false;
    bool amphichiral = false;
    bool mirrored = false;
    std::optional<std::vector<std::vector<long long>>> linking_matrix;
    std::optional<std::vector<bool>> unknotted;
    bool operator==(const NamedModel&) const = default;
};

struct ModelLink {
    std::variant<KeyChainModel, SeifertModel, NamedModel> data;

    bool is_keychain() const { return std::holds_alternative<KeyChainModel>(data); }
    bool is_seifert() const { return std::holds_alternative<SeifertModel>(data); }
    bool is_named() const { return std::holds_alternative<NamedModel>(data); }
    const KeyChainModel& keychain() const { return std::get<KeyChainModel>(data); }
    const SeifertModel& seifert() const { return std::get<SeifertModel>(data); }
    const NamedModel& named() const { return std::get<NamedModel>(data); }
    NamedModel& named() { return std::get<NamedModel>(data); }

    int component_count() const;
    bool hyperbolic() const;
    // Self-mirror labels (key-chain and Seifert data are kept modulo the global
    // mirror convention; named labels only when annotated amphichiral).
    bool self_mirror() const;
    bool mirrored_flag() const;
    ModelLink mirror() const;
    // lk between model components a and b (positional), when the data determines it.
    std::optional<long long> linking(int a, int b) const;
    // Whether component i is an unknot, when the data determines it.
    std::optional<bool> unknotted_component(int i) const;

    bool operator==(const ModelLink&) const = default;
};

struct ComponentRef {
    enum class Kind { External, Edge };
    Kind kind = Kind::External;
    std::string id;      // external name or edge id
    int sign = 0;        // externals only: -1, +1, or 0 = unassigned

    static ComponentRef external(std::string name, int sign = 0) {
        return ComponentRef{Kind::External, std::move(name), sign};
    }
    static ComponentRef edge(std::string edge_id) {
        return ComponentRef{Kind::Edge, std::move(edge_id), 0};
    }
    bool is_external() const { return kind == Kind::External; }
    bool is_edge() const { return kind == Kind::Edge; }
    bool operator==(const ComponentRef&) const = default;
};

struct Vertex {
    VertexId id;
    Geometry geometry;
    std::vector<ComponentRef> components;  // ordered; aligns with model components
    std::optional<ModelLink> model;
    std::map<EdgeId, long long> winding;   // declared lk(pattern, cut component) per entering edge

    int component_index(const ComponentRef& ref) const;
    std::optional<int> find_external(const ExternalName& name) const;
    std::optional<int> find_edge_component(const EdgeId& edge) const;
};

struct EdgeDirection {
    bool directed = false;
    VertexId from;
    VertexId to;

    static EdgeDirection undirected() { return EdgeDirection{}; }
    static EdgeDirection from_to(VertexId f, VertexId t) {
        return EdgeDirection{true, std::move(f), std::move(t)};
    }
    bool operator==(const EdgeDirection&) const = default;
};

struct Edge {
    EdgeId id;
    VertexId end_a;  // as written in the input document
    VertexId end_b;
    EdgeDirection direction;

    VertexId other(const VertexId& v) const { return v == end_a ? end_b : end_a; }
    bool incident(const VertexId& v) const { return v == end_a || v == end_b; }
};

struct ValidationIssue {
    std::string rule;
    std::string detail;
};

enum class GraphClass { Empty, KnotGraph, LinkGraph, Split };

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    GraphClass classification = GraphClass::Empty;

    bool valid() const { return issues.empty(); }
};

const char* graph_class_name(GraphClass c);

// Labeled, partially directed forest of JSJ pieces. Immutable once validated;
// the operations below are pure and return new graphs.
struct CompanionshipGraph {
    AtomRegistry atoms;
    std::map<VertexId, Vertex> vertices;
    std::map<EdgeId, Edge> edges;

    const Vertex& vertex(const VertexId& id) const;
    const Edge& edge(const EdgeId& id) const;
    bool has_vertex(const VertexId& id) const { return vertices.count(id) != 0; }
    bool has_edge(const EdgeId& id) const { return edges.count(id) != 0; }

    std::map<ExternalName, VertexId> externals() const;
    std::vector<EdgeId> edges_at(const VertexId& v) const;
    // Connected components as sorted vertex-id sets.
    std::vector<std::vector<VertexId>> connected_components() const;
    bool connected() const { return connected_components().size() == 1; }
};

// Tolerance used for Gromov-norm comparisons; overridable via SPLICEKIT_TOLERANCE.
double norm_tolerance();
void set_norm_tolerance(double tol);

ValidationReport validate(const CompanionshipGraph& graph);

// Root of a valid knot graph: the vertex carrying the unique external component,
// equal to the sink of every maximal directed path.
VertexId root_of(const CompanionshipGraph& graph);

long long linking_number(const Vertex& vertex, const ComponentRef& a, const ComponentRef& b);

// Unknottedness of the vertex component at `ref`, when model data determines it.
std::optional<bool> component_unknotted(const Vertex& vertex, const ComponentRef& ref);

bool same_graph(const CompanionshipGraph& a, const CompanionshipGraph& b);

}  // namespace splicekit
