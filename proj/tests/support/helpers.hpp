#pragma once

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "splicekit/action.hpp"
#include "splicekit/complexity.hpp"
#include "splicekit/engine.hpp"
#include "splicekit/graph.hpp"
#include "splicekit/ops.hpp"

namespace sktest {

using namespace splicekit;

inline Vertex vertex(VertexId id, Geometry geometry, std::vector<ComponentRef> comps,
                     std::optional<ModelLink> model = std::nullopt) {
    Vertex v;
    v.id = std::move(id);
    v.geometry = std::move(geometry);
    v.components = std::move(comps);
    v.model = std::move(model);
    return v;
}

inline Edge directed(EdgeId id, VertexId from, VertexId to) {
    Edge e;
    e.id = std::move(id);
    e.end_a = from;
    e.end_b = to;
    e.direction = EdgeDirection::from_to(e.end_a, e.end_b);
    return e;
}

inline Edge undirected(EdgeId id, VertexId a, VertexId b) {
    Edge e;
    e.id = std::move(id);
    e.end_a = std::move(a);
    e.end_b = std::move(b);
    e.direction = EdgeDirection::undirected();
    return e;
}

inline void add(CompanionshipGraph& g, Vertex v) { g.vertices.emplace(v.id, std::move(v)); }
inline void add(CompanionshipGraph& g, Edge e) { g.edges.emplace(e.id, std::move(e)); }

inline void sign_edge(AmphichiralAction& a, const EdgeId& e, const VertexId& v1, int s1,
                      const VertexId& v2, int s2) {
    a.edge_signs[e] = {{v1, s1}, {v2, s2}};
}

// Single-vertex knot graph with a hyperbolic label.
inline CompanionshipGraph hyperbolic_knot_vertex(const std::string& atom = "v41",
                                                 double volume = 2.029883213) {
    CompanionshipGraph g;
    g.atoms.insert({atom, volume});
    add(g, vertex("v", Geometry::hyperbolic(atom), {ComponentRef::external("k")}));
    return g;
}

inline AmphichiralAction negative_identity(const CompanionshipGraph& g) {
    AmphichiralAction a;
    for (const auto& [name, _] : g.externals()) a.external_signs[name] = -1;
    return a;
}

struct Rng {
    std::mt19937 engine;
    explicit Rng(unsigned seed) : engine(seed) {}
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
    bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(engine) < p; }
};

inline std::string padded(const char* prefix, int i) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%s%02d", prefix, i);
    return buf;
}

struct RandomTree {
    CompanionshipGraph graph;
    std::vector<int> parent;                 // parent[0] = -1
    std::vector<std::string> vertex_ids;     // v00..; v00 is the root
    std::vector<std::string> edge_ids;       // edge i joins v_i to its parent, i >= 1
};

// Random labeled tree, no models. Knot mode: one external at the root, every
// edge directed toward it. Link mode: 2-3 externals, edges directed toward the
// root or (sometimes) undirected.
inline RandomTree random_tree(Rng& rng, int max_vertices, bool knot_mode,
                              bool allow_undirected = false) {
    RandomTree t;
    int n = rng.pick(knot_mode ? 2 : 1, std::max(2, max_vertices));
    static const std::vector<std::pair<std::string, double>> pool = {
        {"vA", 2.029883213}, {"vB", 3.663862377}, {"vC", 5.333489567}, {"vD", 7.327724753}};
    for (int i = 0; i < n; ++i) {
        t.vertex_ids.push_back(padded("v", i));
        t.parent.push_back(i == 0 ? -1 : rng.pick(0, i - 1));
    }
    std::vector<std::vector<ComponentRef>> comps(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) {
        t.edge_ids.push_back(padded("e", i));
        comps[static_cast<size_t>(i)].push_back(ComponentRef::edge(t.edge_ids.back()));
        comps[static_cast<size_t>(t.parent[static_cast<size_t>(i)])].push_back(
            ComponentRef::edge(t.edge_ids.back()));
    }
    t.edge_ids.insert(t.edge_ids.begin(), "");  // align: edge i joins v_i upward

    if (knot_mode) {
        comps[0].insert(comps[0].begin(), ComponentRef::external("k"));
    } else {
        int externals = rng.pick(1, 3);
        for (int x = 0; x < externals; ++x) {
            int host = x == 0 ? 0 : rng.pick(0, n - 1);
            comps[static_cast<size_t>(host)].insert(comps[static_cast<size_t>(host)].begin(),
                                                    ComponentRef::external(padded("k", x)));
        }
    }
    for (int i = 0; i < n; ++i) {
        Geometry geo = Geometry::seifert();
        if (rng.chance(0.5)) {
            auto [name, value] = pool[static_cast<size_t>(rng.pick(0, (int)pool.size() - 1))];
            t.graph.atoms.insert({name, value});
            geo = Geometry::hyperbolic(name);
        }
        add(t.graph, vertex(t.vertex_ids[static_cast<size_t>(i)], geo,
                            comps[static_cast<size_t>(i)]));
    }
    for (int i = 1; i < n; ++i) {
        const auto& child = t.vertex_ids[static_cast<size_t>(i)];
        const auto& par = t.vertex_ids[static_cast<size_t>(t.parent[static_cast<size_t>(i)])];
        if (!knot_mode && allow_undirected && rng.chance(0.25))
            add(t.graph, undirected(t.edge_ids[static_cast<size_t>(i)], child, par));
        else
            add(t.graph, directed(t.edge_ids[static_cast<size_t>(i)], child, par));
    }
    return t;
}

enum class SignPattern { AllCoherent, IncoherentRoot, ProperlyIncoherentDeep, RootMixed, Random };

// Identity action (order 1, reduced) with every edge signed. Coherent edges get
// +1 at the head; external signs are all -1.
inline AmphichiralAction identity_signed(const RandomTree& t, Rng& rng, SignPattern pattern) {
    AmphichiralAction a = negative_identity(t.graph);
    auto coherent = [&](int i) {
        const Edge& e = t.graph.edge(t.edge_ids[static_cast<size_t>(i)]);
        sign_edge(a, e.id, e.direction.to, +1, e.direction.from, -1);
    };
    auto incoherent = [&](int i) {
        const Edge& e = t.graph.edge(t.edge_ids[static_cast<size_t>(i)]);
        sign_edge(a, e.id, e.direction.to, -1, e.direction.from, +1);
    };
    int n = static_cast<int>(t.vertex_ids.size());
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) children[static_cast<size_t>(t.parent[static_cast<size_t>(i)])].push_back(i);

    switch (pattern) {
        case SignPattern::AllCoherent:
            for (int i = 1; i < n; ++i) coherent(i);
            break;
        case SignPattern::IncoherentRoot:
            for (int i = 1; i < n; ++i) {
                if (t.parent[static_cast<size_t>(i)] == 0) incoherent(i);
                else if (rng.chance(0.5)) coherent(i);
                else incoherent(i);
            }
            break;
        case SignPattern::ProperlyIncoherentDeep: {
            // Pick a non-root vertex with children; its subtree becomes the single
            // complement piece with an incoherent root.
            int w = -1;
            for (int i = 1; i < n && w < 0; ++i)
                if (!children[static_cast<size_t>(i)].empty()) w = i;
            if (w < 0) {  // no such vertex: fall back to an incoherent root
                for (int i = 1; i < n; ++i) incoherent(i);
                break;
            }
            std::set<int> below;  // strict subtree of w
            std::vector<int> queue{w};
            while (!queue.empty()) {
                int cur = queue.back();
                queue.pop_back();
                for (int c : children[static_cast<size_t>(cur)]) {
                    below.insert(c);
                    queue.push_back(c);
                }
            }
            for (int i = 1; i < n; ++i) {
                if (t.parent[static_cast<size_t>(i)] == w) incoherent(i);
                else if (below.count(i)) (rng.chance(0.5) ? coherent(i) : incoherent(i));
                else coherent(i);
            }
            break;
        }
        case SignPattern::RootMixed: {
            // Needs a root with at least two children; else degrade to random.
            bool first = true;
            for (int i = 1; i < n; ++i) {
                if (t.parent[static_cast<size_t>(i)] == 0) {
                    if (first) coherent(i);
                    else incoherent(i);
                    first = false;
                } else {
                    (rng.chance(0.5) ? coherent(i) : incoherent(i));
                }
            }
            break;
        }
        case SignPattern::Random:
            for (int i = 1; i < n; ++i) (rng.chance(0.5) ? coherent(i) : incoherent(i));
            break;
    }
    return a;
}

// Star of `arms` identical abstract branches under a cyclic rotation; no fixed
// edges when the rotation has no fixed arm.
struct StarInstance {
    CompanionshipGraph graph;
    AmphichiralAction action;
};

inline StarInstance rotated_star(int arms, int shift, bool hyperbolic_root = false,
                                 int branch_depth = 1) {
    StarInstance s;
    std::vector<ComponentRef> root_comps{ComponentRef::external("k")};
    for (int i = 0; i < arms; ++i) root_comps.push_back(ComponentRef::edge(padded("e", i)));
    if (hyperbolic_root) {
        s.graph.atoms.insert({"vR", 9.161706327});
        add(s.graph, vertex("root", Geometry::hyperbolic("vR"), root_comps));
    } else {
        add(s.graph, vertex("root", Geometry::seifert(), root_comps));
    }
    for (int i = 0; i < arms; ++i) {
        std::vector<ComponentRef> comps{ComponentRef::edge(padded("e", i))};
        if (branch_depth > 1) comps.push_back(ComponentRef::edge(padded("f", i)));
        add(s.graph, vertex(padded("a", i), Geometry::seifert(), comps));
        add(s.graph, directed(padded("e", i), padded("a", i), "root"));
        if (branch_depth > 1) {
            add(s.graph, vertex(padded("b", i), Geometry::seifert(),
                                {ComponentRef::edge(padded("f", i))}));
            add(s.graph, directed(padded("f", i), padded("b", i), padded("a", i)));
        }
    }
    s.action.external_signs["k"] = -1;
    for (int i = 0; i < arms; ++i) {
        int j = (i + shift) % arms;
        if (i != j) {
            s.action.vertex_perm[padded("a", i)] = padded("a", j);
            s.action.edge_perm[padded("e", i)] = padded("e", j);
            if (branch_depth > 1) {
                s.action.vertex_perm[padded("b", i)] = padded("b", j);
                s.action.edge_perm[padded("f", i)] = padded("f", j);
            }
        }
    }
    return s;
}

// Independent reachability oracle for the downward-consequence set: transitive
// closure over directed edges by iterated squaring of the adjacency relation.
inline std::set<EdgeId> dc_oracle(const CompanionshipGraph& head_side, const VertexId& head) {
    std::vector<VertexId> ids;
    for (const auto& [vid, _] : head_side.vertices) ids.push_back(vid);
    auto index = [&](const VertexId& v) {
        return static_cast<size_t>(std::find(ids.begin(), ids.end(), v) - ids.begin());
    };
    size_t n = ids.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& [eid, e] : head_side.edges)
        if (e.direction.directed) reach[index(e.direction.from)][index(e.direction.to)] = true;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    std::set<EdgeId> out;
    for (const auto& [eid, e] : head_side.edges)
        if (e.direction.directed && reach[index(head)][index(e.direction.from)]) out.insert(eid);
    return out;
}

// Independent enumeration oracle: explicit coefficient loops for up to three atoms.
inline std::vector<double> enumerate_oracle(const std::vector<double>& atoms, double bound) {
    double tol = norm_tolerance();
    std::vector<double> sums;
    std::vector<long long> caps;
    for (double a : atoms) caps.push_back(static_cast<long long>(bound / a) + 1);
    std::vector<long long> coeff(atoms.size(), 0);
    while (true) {
        double sum = 0;
        for (size_t i = 0; i < atoms.size(); ++i) sum += atoms[i] * static_cast<double>(coeff[i]);
        if (sum <= bound + tol) sums.push_back(sum);
        size_t idx = 0;
        while (idx < coeff.size()) {
            if (++coeff[idx] <= caps[idx]) break;
            coeff[idx] = 0;
            ++idx;
        }
        if (idx == coeff.size()) break;
    }
    std::sort(sums.begin(), sums.end());
    std::vector<double> merged;
    for (double v : sums)
        if (merged.empty() || v - merged.back() > tol) merged.push_back(v);
    return merged;
}

// Splices the two sides of a cut back together and restores the directions the
// cut recorded as undirected.
inline CompanionshipGraph undo_cut(const CutResult& cut, const Edge& original) {
    SpliceDirection dir = SpliceDirection::IntoSecond;
    if (!original.direction.directed) dir = SpliceDirection::Undirected;
    SpliceResult spliced = splice(cut.side1, ComponentRef::external(cut.cut_edge), cut.side2,
                                  ComponentRef::external(cut.cut_edge), dir);
    CompanionshipGraph g = spliced.graph;
    for (const Edge& e : cut.dc_original) g.edges.at(e.id).direction = e.direction;
    return g;
}

// All root-to-leaf complexity sequences of a certificate.
inline void certificate_paths(const Certificate& cert, std::vector<Complexity>& prefix,
                              std::vector<std::vector<Complexity>>& out) {
    prefix.push_back(cert.complexity_before);
    if (cert.children.empty()) {
        out.push_back(prefix);
    } else {
        for (const auto& child : cert.children) certificate_paths(child, prefix, out);
    }
    prefix.pop_back();
}

}  // namespace sktest
