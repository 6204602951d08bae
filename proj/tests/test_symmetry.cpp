#include <doctest.h>

#include "splicekit/action.hpp"
#include "splicekit/catalog.hpp"
#include "support/helpers.hpp"

using namespace splicekit;
using namespace sktest;

namespace {

bool has_rule(const ValidationReport& report, const std::string& rule) {
    for (const auto& issue : report.issues)
        if (issue.rule == rule) return true;
    return false;
}

}  // namespace

TEST_CASE("the identity action on the composite-knot fixture validates") {
    const auto& f = fixture("grp_knot");
    // hand check: each fixed edge carries +1 at its head and -1 at its tail, so
    // every product is -1 and every edge is coherently directed
    for (const auto& [eid, e] : f.graph.edges) {
        int head = f.action.edge_sign_at(eid, e.direction.to);
        int tail = f.action.edge_sign_at(eid, e.direction.from);
        CHECK(head == +1);
        CHECK(head * tail == -1);
    }
    CHECK(validate_action(f.graph, f.action).valid());
}

TEST_CASE("a fixed edge with signs (+1,+1) is rejected by the sign-product rule") {
    const auto& f = fixture("grp_knot");
    AmphichiralAction broken = f.action;
    broken.edge_signs["t-fig8"] = {{"compose", +1}, {"fig8", +1}};
    auto report = validate_action(f.graph, broken);
    CHECK_FALSE(report.valid());
    CHECK(has_rule(report, "edge_sign_product"));
}

TEST_CASE("sign assignments are accepted exactly when every fixed pair multiplies to -1") {
    // chain with three fixed edges under the identity action; try every pair of signs
    CompanionshipGraph g;
    add(g, vertex("v0", Geometry::seifert(),
                  {ComponentRef::external("k"), ComponentRef::edge("e1")}));
    add(g, vertex("v1", Geometry::seifert(),
                  {ComponentRef::edge("e1"), ComponentRef::edge("e2")}));
    add(g, vertex("v2", Geometry::seifert(),
                  {ComponentRef::edge("e2"), ComponentRef::edge("e3")}));
    add(g, vertex("v3", Geometry::seifert(), {ComponentRef::edge("e3")}));
    add(g, directed("e1", "v1", "v0"));
    add(g, directed("e2", "v2", "v1"));
    add(g, directed("e3", "v3", "v2"));

    const std::vector<std::pair<int, int>> pairs = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const auto& [a1, b1] : pairs)
        for (const auto& [a2, b2] : pairs)
            for (const auto& [a3, b3] : pairs) {
                AmphichiralAction a = negative_identity(g);
                sign_edge(a, "e1", "v0", a1, "v1", b1);
                sign_edge(a, "e2", "v1", a2, "v2", b2);
                sign_edge(a, "e3", "v2", a3, "v3", b3);
                bool expected = a1 * b1 == -1 && a2 * b2 == -1 && a3 * b3 == -1;
                CHECK(validate_action(g, a).valid() == expected);
            }
}

TEST_CASE("fixed edges must carry signs and non-fixed edges must not") {
    const auto& f = fixture("grp_knot");
    AmphichiralAction missing = f.action;
    missing.edge_signs.erase("t-wh");
    CHECK(has_rule(validate_action(f.graph, missing), "edge_unsigned"));

    StarInstance star = rotated_star(2, 1);
    AmphichiralAction spurious = star.action;
    spurious.edge_signs["e00"] = {{"root", +1}, {"a00", -1}};
    CHECK(has_rule(validate_action(star.graph, spurious), "edge_signed"));
}

TEST_CASE("without fixed edges there is exactly one fixed vertex carrying the boundary") {
    StarInstance ok = rotated_star(2, 1);
    CHECK(validate_action(ok.graph, ok.action).valid());

    // claiming swapped edges while fixing all vertices breaks both equivariance
    // and the unique-fixed-vertex rule
    StarInstance broken = rotated_star(2, 1);
    broken.action.vertex_perm.clear();
    auto report = validate_action(broken.graph, broken.action);
    CHECK_FALSE(report.valid());
    CHECK(has_rule(report, "unique_fixed_vertex"));
}

TEST_CASE("external components must be signed and hosted at fixed vertices") {
    StarInstance star = rotated_star(2, 1);
    AmphichiralAction unsigned_action = star.action;
    unsigned_action.external_signs.clear();
    CHECK(has_rule(validate_action(star.graph, unsigned_action), "external_signed"));
}

TEST_CASE("permutations must respect incidence, direction, and geometry") {
    StarInstance star = rotated_star(2, 1);
    AmphichiralAction lopsided = star.action;
    lopsided.edge_perm.clear();  // vertices swap but edges claim to stay put
    CHECK(has_rule(validate_action(star.graph, lopsided), "incidence_equivariance"));

    // give the two swapped arms different geometry
    StarInstance lopsided_geo = rotated_star(2, 1);
    lopsided_geo.graph.atoms.insert({"vA", 2.029883213});
    lopsided_geo.graph.vertices.at("a00").geometry = Geometry::hyperbolic("vA");
    CHECK(has_rule(validate_action(lopsided_geo.graph, lopsided_geo.action),
                   "geometry_equivariance"));
}

TEST_CASE("both-reversed components of a fixed piece must have linking number zero") {
    // one-ring key-chain with both components reversed: the linking number is 1
    CompanionshipGraph g;
    add(g, vertex("hopf", Geometry::seifert(),
                  {ComponentRef::external("c"), ComponentRef::external("r")},
                  ModelLink{KeyChainModel{1}}));
    AmphichiralAction a;
    a.external_signs = {{"c", -1}, {"r", -1}};
    auto report = validate_action(g, a);
    CHECK_FALSE(report.valid());
    CHECK(has_rule(report, "reversed_pair_linking"));

    // preserving the ring resolves it
    a.external_signs["r"] = +1;
    CHECK(validate_action(g, a).valid());
}

TEST_CASE("mirror labeling: swapped labels must alternate their mirror flag") {
    StarInstance star = rotated_star(2, 1);
    NamedModel plain;
    plain.name = "asym";
    plain.component_count = 1;
    star.graph.vertices.at("a00").model = ModelLink{plain};
    NamedModel flipped = plain;
    flipped.mirrored = true;
    star.graph.vertices.at("a01").model = ModelLink{flipped};
    CHECK(validate_action(star.graph, star.action).valid());

    star.graph.vertices.at("a01").model = ModelLink{plain};
    CHECK(has_rule(validate_action(star.graph, star.action), "mirror_label"));
}

TEST_CASE("a fixed vertex needs an amphichiral label") {
    CompanionshipGraph g;
    g.atoms.insert({"vA", 2.029883213});
    NamedModel chiral;
    chiral.name = "chiral";
    chiral.component_count = 1;
    chiral.hyperbolic = true;
    add(g, vertex("v", Geometry::hyperbolic("vA"), {ComponentRef::external("k")},
                  ModelLink{chiral}));
    AmphichiralAction a = negative_identity(g);
    CHECK(has_rule(validate_action(g, a), "mirror_label"));

    NamedModel fine = chiral;
    fine.amphichiral = true;
    g.vertices.at("v").model = ModelLink{fine};
    CHECK(validate_action(g, a).valid());
}

TEST_CASE("declared symmetry orders sit on fixed hyperbolic vertices and are powers of two") {
    CompanionshipGraph g = hyperbolic_knot_vertex();
    AmphichiralAction a = negative_identity(g);
    a.local_orders["v"] = 3;
    CHECK(has_rule(validate_action(g, a), "local_order"));
    a.local_orders["v"] = 4;
    CHECK(validate_action(g, a).valid());
    a.local_orders["w"] = 2;
    CHECK(has_rule(validate_action(g, a), "local_order"));
}

TEST_CASE("reduce raises the action to the odd part of its order") {
    StarInstance twelve = rotated_star(12, 1);  // a 12-cycle on the arms
    CHECK(action_order(twelve.graph, twelve.action) == 12);
    CHECK_FALSE(is_reduced(twelve.graph, twelve.action));
    ReduceResult r = reduce(twelve.graph, twelve.action);
    CHECK(action_order(twelve.graph, r.action) == 4);
    CHECK(is_reduced(twelve.graph, r.action));
    CHECK(r.newly_fixed.empty());
    CHECK(pq_type(r.action) == pq_type(twelve.action));

    StarInstance eight = rotated_star(8, 1);
    ReduceResult unchanged = reduce(eight.graph, eight.action);
    CHECK(action_order(eight.graph, unchanged.action) == 8);
    CHECK(unchanged.newly_fixed.empty());
    CHECK(unchanged.action.vertex_perm == eight.action.vertex_perm);
}

TEST_CASE("reducing a 3-cycle fixes everything and demands fresh signs") {
    StarInstance three = rotated_star(3, 1);
    CHECK(action_order(three.graph, three.action) == 3);
    ReduceResult r = reduce(three.graph, three.action);
    CHECK(action_order(three.graph, r.action) == 1);
    CHECK(r.newly_fixed == std::set<EdgeId>{"e00", "e01", "e02"});
    CHECK_FALSE(validate_action(three.graph, r.action).valid());  // unsigned fixed edges

    std::map<EdgeId, std::map<VertexId, int>> signs;
    for (const auto& eid : r.newly_fixed)
        signs[eid] = {{"root", +1}, {three.graph.edge(eid).end_a, -1}};
    AmphichiralAction annotated = annotate_signs(three.graph, r.action, signs);
    CHECK(validate_action(three.graph, annotated).valid());

    // a bad product and an incomplete cover are both rejected
    auto bad = signs;
    bad["e00"] = {{"root", -1}, {"a00", -1}};
    CHECK_THROWS_AS(annotate_signs(three.graph, r.action, bad), SpliceError);
    auto partial = signs;
    partial.erase("e01");
    CHECK_THROWS_AS(annotate_signs(three.graph, r.action, partial), SpliceError);
}

TEST_CASE("reduce is idempotent and preserves the reversal counts") {
    Rng rng(8086);
    for (int arms : {3, 5, 6, 12, 10}) {
        StarInstance s = rotated_star(arms, 1 + rng.pick(0, 1));
        ReduceResult once = reduce(s.graph, s.action);
        ReduceResult twice = reduce(s.graph, once.action);
        CHECK(twice.action.vertex_perm == once.action.vertex_perm);
        CHECK(twice.action.edge_perm == once.action.edge_perm);
        CHECK(twice.newly_fixed.empty());
        CHECK(pq_type(once.action) == pq_type(s.action));
    }
}

TEST_CASE("orbit bookkeeping") {
    const auto& f = fixture("grp_knot");
    auto vertex_orbits = orbits(f.graph, f.action, OrbitItems::Vertices);
    CHECK(vertex_orbits.size() == f.graph.vertices.size());  // identity: all singletons

    StarInstance swap2 = rotated_star(2, 1);
    auto edge_orbits = orbits(swap2.graph, swap2.action, OrbitItems::Edges);
    REQUIRE(edge_orbits.size() == 1);
    CHECK(edge_orbits.front().size() == 2);

    StarInstance four = rotated_star(4, 1);
    auto root_comps = orbits(four.graph, four.action, OrbitItems::ComponentsOf, "root");
    // one singleton boundary component and one 4-orbit of seams
    REQUIRE(root_comps.size() == 2);
    size_t largest = std::max(root_comps[0].size(), root_comps[1].size());
    CHECK(largest == 4);
}

TEST_CASE("every valid action fixes at least one vertex") {
    Rng rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        StarInstance s = rotated_star(rng.pick(2, 6), 1);
        if (!validate_action(s.graph, s.action).valid()) continue;
        CHECK_FALSE(s.action.fixed_vertices(s.graph).empty());
    }
}

TEST_CASE("without fixed edges the seam orbits at the fixed vertex pair up") {
    for (int arms : {2, 4, 6, 8}) {
        StarInstance s = rotated_star(arms, 1);
        REQUIRE(validate_action(s.graph, s.action).valid());
        auto comps = orbits(s.graph, s.action, OrbitItems::ComponentsOf, "root");
        size_t seam_total = 0;
        for (const auto& orbit : comps)
            if (orbit.front().rfind("e:", 0) == 0) {
                CHECK(orbit.size() % 2 == 0);
                seam_total += orbit.size();
            }
        CHECK(seam_total == static_cast<size_t>(arms));
    }
}
