#include "splicekit/catalog.hpp"

#include <algorithm>

namespace splicekit {

namespace {

Vertex make_vertex(VertexId id, Geometry geometry, std::vector<ComponentRef> comps,
                   std::optional<ModelLink> model = std::nullopt,
                   std::map<EdgeId, long long> winding = {}) {
    Vertex v;
    v.id = std::move(id);
    v.geometry = std::move(geometry);
    v.components = std::move(comps);
    v.model = std::move(model);
    v.winding = std::move(winding);
    return v;
}

Edge directed_edge(EdgeId id, VertexId from, VertexId to) {
    Edge e;
    e.id = std::move(id);
    e.end_a = from;
    e.end_b = to;
    e.direction = EdgeDirection::from_to(e.end_a, e.end_b);
    return e;
}

Edge undirected_edge(EdgeId id, VertexId a, VertexId b) {
    Edge e;
    e.id = std::move(id);
    e.end_a = std::move(a);
    e.end_b = std::move(b);
    e.direction = EdgeDirection::undirected();
    return e;
}

ModelLink keychain(int rings) { return ModelLink{KeyChainModel{rings}}; }

ModelLink seifert(long long p, long long q, bool star1, bool star2, bool mirrored = false) {
    return ModelLink{SeifertModel{p, q, star1, star2, mirrored}};
}

ModelLink named(std::string name, int components, bool hyperbolic, bool amphichiral,
                std::optional<std::vector<std::vector<long long>>> matrix = std::nullopt,
                std::optional<std::vector<bool>> unknotted = std::nullopt) {
    NamedModel m;
    m.name = std::move(name);
    m.component_count = components;
    m.hyperbolic = hyperbolic;
    m.amphichiral = amphichiral;
    m.linking_matrix = std::move(matrix);
    m.unknotted = std::move(unknotted);
    return ModelLink{m};
}

void add(CompanionshipGraph& g, Vertex v) { g.vertices.emplace(v.id, std::move(v)); }
void add(CompanionshipGraph& g, Edge e) { g.edges.emplace(e.id, std::move(e)); }

void sign_edge(AmphichiralAction& a, const EdgeId& e, const VertexId& v1, int s1,
               const VertexId& v2, int s2) {
    a.edge_signs[e] = {{v1, s1}, {v2, s2}};
}

constexpr double kFigureEightVolume = 2.029883213;
constexpr double kWhiteheadVolume = 3.663862377;
constexpr double kBorromeanVolume = 7.327724753;

ModelLink figure_eight_model() {
    return named("figure-eight", 1, true, true, {{{0}}}, {{false}});
}

Fixture make_grp_knot() {
    Fixture f;
    f.name = "grp_knot";
    f.notes =
        "Connected sum of a mirrored (2,3) torus knot, a figure-eight knot, and a positive "
        "Whitehead double of the figure-eight: key-chain composing piece at the root with "
        "three companion branches. The torus-knot label is recorded mirrored; the source "
        "diagram is ambiguous about which chirality it shows.";
    auto& g = f.graph;
    g.atoms.insert({"v41", kFigureEightVolume});
    g.atoms.insert({"vWh", kWhiteheadVolume});
    add(g, make_vertex("compose", Geometry::seifert(),
                       {ComponentRef::external("k"), ComponentRef::edge("t-tref"),
                        ComponentRef::edge("t-fig8"), ComponentRef::edge("t-wh")},
                       keychain(3)));
    add(g, make_vertex("tref", Geometry::seifert(), {ComponentRef::edge("t-tref")},
                       seifert(2, 3, false, false, true)));
    add(g, make_vertex("fig8", Geometry::hyperbolic("v41"), {ComponentRef::edge("t-fig8")},
                       figure_eight_model()));
    add(g, make_vertex("wh", Geometry::hyperbolic("vWh"),
                       {ComponentRef::edge("t-wh"), ComponentRef::edge("t-wh-fig8")},
                       named("whitehead", 2, true, true, {{{0, 0}, {0, 0}}}, {{true, true}})));
    add(g, make_vertex("wh-fig8", Geometry::hyperbolic("v41"), {ComponentRef::edge("t-wh-fig8")},
                       figure_eight_model()));
    add(g, directed_edge("t-tref", "tref", "compose"));
    add(g, directed_edge("t-fig8", "fig8", "compose"));
    add(g, directed_edge("t-wh", "wh", "compose"));
    add(g, directed_edge("t-wh-fig8", "wh-fig8", "wh"));

    auto& a = f.action;
    a.external_signs["k"] = -1;
    sign_edge(a, "t-tref", "compose", +1, "tref", -1);
    sign_edge(a, "t-fig8", "compose", +1, "fig8", -1);
    sign_edge(a, "t-wh", "compose", +1, "wh", -1);
    sign_edge(a, "t-wh-fig8", "wh", +1, "wh-fig8", -1);
    a.local_orders = {{"fig8", 2}, {"wh", 2}, {"wh-fig8", 2}};

    f.expected_structure = JsjStructure::TotallyCoherent;
    f.expected_verdict = Verdict::Kind::StronglyNegAmphichiral;
    f.expected_bound = 1;
    return f;
}

Fixture make_grp_link() {
    Fixture f;
    f.name = "grp_link";
    f.notes =
        "Two-component link assembled by splicing: a key-chain piece carrying one boundary "
        "component, a Seifert-fibered companion branch, and a Whitehead piece carrying the "
        "other boundary component across an undirected seam.";
    auto& g = f.graph;
    g.atoms.insert({"vWh", kWhiteheadVolume});
    add(g, make_vertex("mid", Geometry::seifert(),
                       {ComponentRef::external("a"), ComponentRef::edge("t-companion"),
                        ComponentRef::edge("t-clasp")},
                       keychain(2)));
    add(g, make_vertex("companion", Geometry::seifert(), {ComponentRef::edge("t-companion")}));
    add(g, make_vertex("clasp", Geometry::hyperbolic("vWh"),
                       {ComponentRef::external("b"), ComponentRef::edge("t-clasp")},
                       named("whitehead", 2, true, true, {{{0, 0}, {0, 0}}}, {{true, true}})));
    add(g, directed_edge("t-companion", "companion", "mid"));
    add(g, undirected_edge("t-clasp", "mid", "clasp"));

    auto& a = f.action;
    a.external_signs = {{"a", -1}, {"b", -1}};
    sign_edge(a, "t-companion", "mid", +1, "companion", -1);
    sign_edge(a, "t-clasp", "mid", +1, "clasp", -1);

    f.expected_verdict = Verdict::Kind::RationallySlice;
    f.expected_bound = 2;
    return f;
}

Fixture make_max_special() {
    Fixture f;
    f.name = "max_special";
    f.notes =
        "Knot graph whose companion subtree stops at a mixed vertex: the complement piece "
        "has an incoherent root once its joining edge is cut, so the whole structure is "
        "properly incoherent.";
    auto& g = f.graph;
    g.atoms.insert({"v41", kFigureEightVolume});
    g.atoms.insert({"vWh", kWhiteheadVolume});
    add(g, make_vertex("r", Geometry::seifert(),
                       {ComponentRef::external("k"), ComponentRef::edge("e1")}));
    add(g, make_vertex("c", Geometry::hyperbolic("v41"),
                       {ComponentRef::edge("e1"), ComponentRef::edge("e2")}));
    add(g, make_vertex("w", Geometry::seifert(),
                       {ComponentRef::edge("e2"), ComponentRef::edge("e3")}));
    add(g, make_vertex("g", Geometry::hyperbolic("vWh"),
                       {ComponentRef::edge("e3"), ComponentRef::edge("e4")}));
    add(g, make_vertex("x", Geometry::seifert(), {ComponentRef::edge("e4")}));
    add(g, directed_edge("e1", "c", "r"));
    add(g, directed_edge("e2", "w", "c"));
    add(g, directed_edge("e3", "g", "w"));
    add(g, directed_edge("e4", "x", "g"));

    auto& a = f.action;
    a.external_signs["k"] = -1;
    sign_edge(a, "e1", "r", +1, "c", -1);
    sign_edge(a, "e2", "c", +1, "w", -1);
    sign_edge(a, "e3", "w", -1, "g", +1);  // incoherent
    sign_edge(a, "e4", "g", +1, "x", -1);

    f.expected_structure = JsjStructure::ProperlyIncoherent;
    f.expected_verdict = Verdict::Kind::ConcordantToSnack;
    f.expected_bound = 1;
    return f;
}

Fixture make_cand1() {
    Fixture f;
    f.name = "cand1";
    f.notes =
        "Weakly negative amphichiral candidate: a hyperbolic four-component pattern whose "
        "reflection reverses the knot component and two companions but preserves the third. "
        "The Alexander product over the branches fails the slice factorization test when the "
        "reversed companion is the figure-eight knot.";
    auto& g = f.graph;
    g.atoms.insert({"v41", kFigureEightVolume});
    g.atoms.insert({"vP2", 5.916747013});
    g.atoms.insert({"vP3", 6.551743288});
    g.atoms.insert({"vRoot1", 24.092961563});
    add(g, make_vertex("root", Geometry::hyperbolic("vRoot1"),
                       {ComponentRef::external("k"), ComponentRef::edge("t1"),
                        ComponentRef::edge("t2"), ComponentRef::edge("t3")},
                       named("chain-mirror-pattern", 4, true, true,
                             {{{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}}},
                             {{false, true, true, true}})));
    add(g, make_vertex("k1", Geometry::hyperbolic("v41"), {ComponentRef::edge("t1")},
                       figure_eight_model()));
    add(g, make_vertex("k2", Geometry::hyperbolic("vP2"), {ComponentRef::edge("t2")},
                       named("companion-two", 1, true, true, {{{0}}}, {{false}})));
    add(g, make_vertex("k3", Geometry::hyperbolic("vP3"), {ComponentRef::edge("t3")},
                       named("companion-three", 1, true, true, {{{0}}}, {{false}})));
    add(g, directed_edge("t1", "k1", "root"));
    add(g, directed_edge("t2", "k2", "root"));
    add(g, directed_edge("t3", "k3", "root"));

    auto& a = f.action;
    a.external_signs["k"] = -1;
    sign_edge(a, "t1", "root", +1, "k1", -1);  // coherent: the reversed companion
    sign_edge(a, "t2", "root", -1, "k2", +1);
    sign_edge(a, "t3", "root", -1, "k3", +1);
    a.local_orders = {{"root", 2}, {"k1", 2}, {"k2", 2}, {"k3", 2}};

    f.expected_structure = JsjStructure::Neither;
    f.expected_verdict = Verdict::Kind::RationallySlice;
    f.expected_bound = 1;
    f.alexander_annotations = {IntPolynomial::from({1, -1, 1}), IntPolynomial::from({1, -1, 1}),
                               IntPolynomial::from({-1, 3, -1})};
    f.expected_fox_milnor = false;
    return f;
}

Fixture make_cand2() {
    Fixture f;
    f.name = "cand2";
    f.notes =
        "Topologically slice candidate: Borromean-ring pattern whose reflection preserves one "
        "companion; the Alexander annotations are trivial.";
    auto& g = f.graph;
    g.atoms.insert({"vBorromean", kBorromeanVolume});
    g.atoms.insert({"v41", kFigureEightVolume});
    g.atoms.insert({"vP2", 5.916747013});
    add(g, make_vertex("root", Geometry::hyperbolic("vBorromean"),
                       {ComponentRef::external("k"), ComponentRef::edge("t1"),
                        ComponentRef::edge("t2")},
                       named("borromean", 3, true, true,
                             {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, {{true, true, true}})));
    add(g, make_vertex("k1", Geometry::hyperbolic("v41"), {ComponentRef::edge("t1")},
                       figure_eight_model()));
    add(g, make_vertex("k2", Geometry::hyperbolic("vP2"), {ComponentRef::edge("t2")},
                       named("companion-two", 1, true, true, {{{0}}}, {{false}})));
    add(g, directed_edge("t1", "k1", "root"));
    add(g, directed_edge("t2", "k2", "root"));

    auto& a = f.action;
    a.external_signs["k"] = -1;
    sign_edge(a, "t1", "root", +1, "k1", -1);
    sign_edge(a, "t2", "root", -1, "k2", +1);
    a.local_orders = {{"root", 2}, {"k1", 2}, {"k2", 2}};

    f.expected_structure = JsjStructure::Neither;
    f.expected_verdict = Verdict::Kind::RationallySlice;
    f.expected_bound = 1;
    f.alexander_annotations = {IntPolynomial::from({1})};
    f.expected_fox_milnor = true;
    return f;
}

Fixture make_hopf_keychain() {
    Fixture f;
    f.name = "hopf_keychain";
    f.notes =
        "One-ring key-chain (the Hopf link) with the core reversed and the ring preserved: "
        "the rotated-reflection symmetry with exactly two fixed points.";
    auto& g = f.graph;
    add(g, make_vertex("hopf", Geometry::seifert(),
                       {ComponentRef::external("c"), ComponentRef::external("r")},
                       keychain(1)));
    f.action.external_signs = {{"c", -1}, {"r", +1}};
    return f;
}

Fixture make_satellite_fibered() {
    Fixture f;
    f.name = "satellite_fibered";
    f.notes =
        "Fibered satellite: a five-strand woven pattern over a figure-eight companion. The "
        "pattern winds five times around the seam, so the seam must be coherently directed "
        "and the structure totally coherent.";
    f.fibered = true;
    auto& g = f.graph;
    g.atoms.insert({"v41", kFigureEightVolume});
    g.atoms.insert({"vTh", 10.667975341});
    add(g, make_vertex("pattern", Geometry::hyperbolic("vTh"),
                       {ComponentRef::external("k"), ComponentRef::edge("tsat")},
                       named("woven-pattern", 2, true, true, {{{0, 5}, {5, 0}}}, {{true, true}}),
                       {{"tsat", 5}}));
    add(g, make_vertex("companion", Geometry::hyperbolic("v41"), {ComponentRef::edge("tsat")},
                       figure_eight_model()));
    add(g, directed_edge("tsat", "companion", "pattern"));

    auto& a = f.action;
    a.external_signs["k"] = -1;
    sign_edge(a, "tsat", "pattern", +1, "companion", -1);
    a.local_orders = {{"pattern", 2}, {"companion", 2}};

    f.expected_structure = JsjStructure::TotallyCoherent;
    f.expected_verdict = Verdict::Kind::StronglyNegAmphichiral;
    f.expected_bound = 1;
    return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> out;
        out.push_back(make_cand1());
        out.push_back(make_cand2());
        out.push_back(make_grp_knot());
        out.push_back(make_grp_link());
        out.push_back(make_hopf_keychain());
        out.push_back(make_max_special());
        out.push_back(make_satellite_fibered());
        return out;
    }();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    fail(ErrorCode::InvalidInput, "no fixture named '" + name + "'");
}

FixtureOutcome run_fixture(const Fixture& f) {
    FixtureOutcome outcome;
    outcome.name = f.name;
    auto& failures = outcome.failures;

    auto graph_report = validate(f.graph);
    for (const auto& issue : graph_report.issues)
        failures.push_back("graph: " + issue.rule + ": " + issue.detail);
    auto action_report = validate_action(f.graph, f.action);
    for (const auto& issue : action_report.issues)
        failures.push_back("action: " + issue.rule + ": " + issue.detail);
    if (!failures.empty()) return outcome;

    try {
        if (f.expected_structure) {
            JsjStructure structure = decide_structure(f.graph, f.action);
            if (structure != *f.expected_structure)
                failures.push_back(std::string("structure: expected ") +
                                   structure_name(*f.expected_structure) + ", got " +
                                   structure_name(structure));
        }

        bool all_negative = true;
        for (const auto& [_, sign] : f.action.external_signs) all_negative &= sign == -1;

        if (all_negative) {
            AnalysisResult result = analyze_link(f.graph, f.action);
            if (f.expected_verdict && result.verdict.kind != *f.expected_verdict)
                failures.push_back(std::string("verdict: expected ") +
                                   verdict_name(*f.expected_verdict) + ", got " +
                                   verdict_name(result.verdict.kind));
            if (f.expected_bound && result.verdict.kaw_bound != *f.expected_bound)
                failures.push_back("bound: expected " + std::to_string(*f.expected_bound) +
                                   ", got " + std::to_string(result.verdict.kaw_bound));
            ReplayOutcome rep = replay(result.certificate, f.graph, f.action);
            if (!rep.ok) failures.push_back("replay: " + rep.failure);
        } else {
            // Mixed-sign fixtures exercise the elementary decision procedure directly.
            auto fixed = f.action.fixed_vertices(f.graph);
            if (f.action.fixed_edges(f.graph).empty() && fixed.size() == 1)
                check_elementary(f.graph, f.action, *fixed.begin());
        }

        if (f.fibered) {
            auto consistency = check_fibered_consistency(f.graph, f.action, true);
            if (!consistency.consistent())
                failures.push_back("fibered: " + consistency.contradictions.front().detail);
            else if (consistency.concluded_structure != JsjStructure::TotallyCoherent)
                failures.push_back("fibered: expected the totally coherent conclusion");
        }

        if (f.expected_fox_milnor) {
            auto product = alexander_of_splice(f.alexander_annotations);
            auto fm = fox_milnor_factor(product);
            if (fm.satisfiable != *f.expected_fox_milnor)
                failures.push_back(std::string("fox-milnor: expected ") +
                                   (*f.expected_fox_milnor ? "satisfiable" : "not satisfiable"));
        }
    } catch (const SpliceError& e) {
        failures.push_back(std::string("error: ") + e.what());
    }

    outcome.passed = failures.empty();
    return outcome;
}

}  // namespace splicekit
