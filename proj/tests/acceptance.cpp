// Acceptance gate: every criterion prints one PASS/FAIL line; the binary exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "splicekit/catalog.hpp"
#include "splicekit/engine.hpp"
#include "splicekit/json_io.hpp"
#include "support/helpers.hpp"

using namespace splicekit;
using namespace sktest;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

// 1. Fixture suite: expectations of the bundled worked examples.
void criterion_fixtures(std::vector<std::string>& failures) {
    for (const auto& f : fixtures()) {
        auto outcome = run_fixture(f);
        expect(failures, outcome.passed,
               f.name + ": " + (outcome.failures.empty() ? "failed" : outcome.failures.front()));
    }
    auto structure = [](const char* name) {
        const auto& f = fixture(name);
        return decide_structure(f.graph, f.action);
    };
    auto analysis = [](const char* name) {
        const auto& f = fixture(name);
        return analyze_link(f.graph, f.action);
    };
    expect(failures, structure("grp_knot") == JsjStructure::TotallyCoherent,
           "grp_knot must be totally coherent");
    auto grp_knot = analysis("grp_knot");
    expect(failures, grp_knot.verdict.kind == Verdict::Kind::StronglyNegAmphichiral,
           "grp_knot must be strongly negative amphichiral");
    expect(failures, structure("max_special") == JsjStructure::ProperlyIncoherent,
           "max_special must be properly incoherent");
    auto max_special = analysis("max_special");
    expect(failures, max_special.verdict.kind == Verdict::Kind::ConcordantToSnack,
           "max_special must be concordant to the companion-subtree knot");
    expect(failures, max_special.verdict.kaw_bound <= 1, "max_special bound must be <= 1");
    for (const char* name : {"cand1", "cand2"}) {
        expect(failures, structure(name) == JsjStructure::Neither,
               std::string(name) + " must be neither totally coherent nor properly incoherent");
        auto result = analysis(name);
        // the bound is at most the reversed companion's bound, which is 1
        expect(failures, result.verdict.kaw_bound <= 1,
               std::string(name) + " bound must be <= the reversed companion's bound");
    }
}

// 2. Round trip: splice after cut reproduces the graph.
void criterion_round_trip(std::vector<std::string>& failures) {
    Rng rng(20250808);
    int done = 0;
    for (int trial = 0; done < 1000; ++trial) {
        RandomTree t = random_tree(rng, 12, trial % 2 == 0, true);
        if (t.graph.edges.empty()) continue;
        ++done;
        std::vector<EdgeId> ids;
        for (const auto& [eid, _] : t.graph.edges) ids.push_back(eid);
        EdgeId pick = ids[static_cast<size_t>(rng.pick(0, (int)ids.size() - 1))];
        const Edge original = t.graph.edge(pick);
        CutResult cut = edge_cut(t.graph, pick);
        CompanionshipGraph restored = undo_cut(cut, original);
        if (!same_graph(t.graph, restored)) {
            failures.push_back("round trip failed at trial " + std::to_string(trial) +
                               " on edge " + pick);
            return;
        }
    }
}

// 3. Sign constraints: exhaustive over the fixed-edge sign assignments, plus the
// unique-fixed-vertex rule for actions without fixed edges.
void criterion_action_constraints(std::vector<std::string>& failures) {
    for (int k = 1; k <= 4; ++k) {
        // a path of k edges under the identity action
        CompanionshipGraph g;
        add(g, vertex("v00", Geometry::seifert(),
                      {ComponentRef::external("x"), ComponentRef::edge("e01")}));
        for (int i = 1; i <= k; ++i) {
            std::vector<ComponentRef> comps{ComponentRef::edge(padded("e", i))};
            if (i < k) comps.push_back(ComponentRef::edge(padded("e", i + 1)));
            add(g, vertex(padded("v", i), Geometry::seifert(), comps));
            add(g, directed(padded("e", i), padded("v", i), padded("v", i - 1)));
        }
        int combos = 1;
        for (int i = 0; i < k; ++i) combos *= 4;
        const int signs_of[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (int mask = 0; mask < combos; ++mask) {
            AmphichiralAction a = negative_identity(g);
            bool expected = true;
            int rest = mask;
            for (int i = 1; i <= k; ++i) {
                const int* pair = signs_of[rest % 4];
                rest /= 4;
                sign_edge(a, padded("e", i), padded("v", i - 1), pair[0], padded("v", i), pair[1]);
                expected = expected && pair[0] * pair[1] == -1;
            }
            bool accepted = validate_action(g, a).valid();
            if (accepted != expected) {
                failures.push_back("sign assignment acceptance mismatch with " +
                                   std::to_string(k) + " fixed edges, case " +
                                   std::to_string(mask));
                return;
            }
        }
    }
    // no fixed edges: accepted with the unique boundary-carrying fixed vertex,
    // rejected when several vertices claim to be fixed
    StarInstance good = rotated_star(4, 1);
    expect(failures, validate_action(good.graph, good.action).valid(),
           "a fixed-point-free arm rotation must validate");
    StarInstance bad = rotated_star(2, 1);
    bad.action.vertex_perm.clear();  // three fixed vertices, no fixed edges
    bool rejected_unique = false;
    for (const auto& issue : validate_action(bad.graph, bad.action).issues)
        rejected_unique |= issue.rule == "unique_fixed_vertex";
    expect(failures, rejected_unique,
           "an action without fixed edges must fix exactly one vertex");
}

// 4. Verdict and certificate replay on random reduced all-reversed knot instances.
void criterion_verdict_replay(std::vector<std::string>& failures) {
    Rng rng(600613);
    const SignPattern patterns[] = {SignPattern::AllCoherent, SignPattern::IncoherentRoot,
                                    SignPattern::ProperlyIncoherentDeep, SignPattern::RootMixed,
                                    SignPattern::Random};
    for (int trial = 0; trial < 1000; ++trial) {
        CompanionshipGraph graph;
        AmphichiralAction action;
        if (trial % 10 == 9) {
            // genuinely permuting reduced actions: arm rotations of two-power order
            const int arms[] = {2, 4, 8};
            StarInstance s = rotated_star(arms[(trial / 10) % 3], 1, false, 1 + trial % 2);
            graph = std::move(s.graph);
            action = std::move(s.action);
        } else {
            RandomTree t = random_tree(rng, 12, true);
            action = identity_signed(t, rng, patterns[trial % 5]);
            graph = std::move(t.graph);
        }
        const CompanionshipGraph& g = graph;
        const AmphichiralAction& a = action;
        JsjStructure structure = decide_structure(g, a);
        bool root_incoherent =
            classify_vertices(g, a).at(root_of(g)) == VertexCoherence::Incoherent;
        AnalysisResult result = analyze_knot(g, a);
        if (structure == JsjStructure::TotallyCoherent &&
            result.verdict.kind != Verdict::Kind::StronglyNegAmphichiral) {
            failures.push_back("totally coherent instance not strongly amphichiral, trial " +
                               std::to_string(trial));
            return;
        }
        if (root_incoherent &&
            (result.verdict.kind != Verdict::Kind::Slice || result.verdict.kaw_bound != 0)) {
            failures.push_back("incoherent-root instance not slice, trial " +
                               std::to_string(trial));
            return;
        }
        if (structure == JsjStructure::ProperlyIncoherent && result.verdict.kaw_bound > 1) {
            failures.push_back("properly incoherent instance exceeded bound 1, trial " +
                               std::to_string(trial));
            return;
        }
        ReplayOutcome rep = replay(result.certificate, g, a);
        if (!rep.ok) {
            failures.push_back("replay failed at trial " + std::to_string(trial) + ": " +
                               rep.failure);
            return;
        }
        std::vector<std::vector<Complexity>> paths;
        std::vector<Complexity> prefix;
        certificate_paths(result.certificate, prefix, paths);
        for (const auto& path : paths)
            if (descent_check(path).kind != DescentResult::Kind::StrictlyDecreasingThroughout) {
                failures.push_back("descent violated at trial " + std::to_string(trial));
                return;
            }
    }
}

// 5. Impossibility suite for the elementary decision procedure.
void criterion_impossibility(std::vector<std::string>& failures) {
    auto rejects = [](const CompanionshipGraph& g, const AmphichiralAction& a,
                      const VertexId& v) {
        try {
            check_elementary(g, a, v);
            return false;
        } catch (const SpliceError& e) {
            return e.code() == ErrorCode::ImpossibleConfiguration ||
                   e.code() == ErrorCode::HypothesesNotMet;
        }
    };
    auto rejects_impossible = [](const CompanionshipGraph& g, const AmphichiralAction& a,
                                 const VertexId& v) {
        try {
            check_elementary(g, a, v);
            return false;
        } catch (const SpliceError& e) {
            return e.code() == ErrorCode::ImpossibleConfiguration;
        }
    };

    // Seifert-fibered labels, |p|,|q| <= 5 coprime, every star subset
    for (long long p = -5; p <= 5; ++p) {
        for (long long q = -5; q <= 5; ++q) {
            if (p == 0 || q == 0 || std::gcd(std::llabs(p), std::llabs(q)) != 1) continue;
            for (int stars = 0; stars < 4; ++stars) {
                bool star1 = stars & 1, star2 = stars & 2;
                CompanionshipGraph g;
                std::vector<ComponentRef> comps{ComponentRef::external("s1")};
                if (star1) comps.push_back(ComponentRef::external("s2"));
                if (star2) comps.push_back(ComponentRef::external("s3"));
                add(g, vertex("v", Geometry::seifert(), comps,
                              ModelLink{SeifertModel{p, q, star1, star2}}));
                AmphichiralAction a;
                a.external_signs["s1"] = -1;
                if (star1) a.external_signs["s2"] = +1;
                if (star2) a.external_signs["s3"] = +1;
                if (!validate_action(g, a).valid()) {
                    failures.push_back("elementary Seifert candidate failed to validate");
                    return;
                }
                bool ok = (star1 && star2) ? rejects(g, a, "v") : rejects_impossible(g, a, "v");
                if (!ok) {
                    failures.push_back("Seifert label S(" + std::to_string(p) + "," +
                                       std::to_string(q) + ") was not rejected");
                    return;
                }
            }
        }
    }

    // hyperbolic pieces of symmetry order 4 and 8
    for (long long order : {4LL, 8LL}) {
        // at least two reversed components
        for (int p = 2; p <= 4; ++p) {
            CompanionshipGraph g;
            g.atoms.insert({"vH", 6.023190883});
            std::vector<ComponentRef> comps;
            for (int i = 0; i < p; ++i) comps.push_back(ComponentRef::external(padded("x", i)));
            add(g, vertex("v", Geometry::hyperbolic("vH"), comps));
            AmphichiralAction a = negative_identity(g);
            a.local_orders["v"] = order;
            if (!rejects_impossible(g, a, "v")) {
                failures.push_back("order " + std::to_string(order) + " with " +
                                   std::to_string(p) + " reversed components was not rejected");
                return;
            }
        }
        // one reversed component over companions (any multi-piece graph)
        StarInstance s = rotated_star(static_cast<int>(order), 1, true);
        s.action.local_orders["root"] = order;
        if (!validate_action(s.graph, s.action).valid()) {
            failures.push_back("rotated star failed to validate");
            return;
        }
        if (!rejects_impossible(s.graph, s.action, "root")) {
            failures.push_back("order " + std::to_string(order) +
                               " over companions was not rejected");
            return;
        }
        // the single-piece declaration stays admissible
        CompanionshipGraph lone;
        lone.atoms.insert({"vH", 6.023190883});
        add(lone, vertex("v", Geometry::hyperbolic("vH"), {ComponentRef::external("k")}));
        AmphichiralAction la = negative_identity(lone);
        la.local_orders["v"] = order;
        try {
            check_elementary(lone, la, "v");
        } catch (const SpliceError&) {
            failures.push_back("single-piece order " + std::to_string(order) +
                               " declaration must stay admissible");
            return;
        }
    }
}

// 6. Well-ordering harness.
void criterion_well_ordering(std::vector<std::string>& failures) {
    auto values = enumerate_norms({1.0, 1.5}, 4.0);
    const std::vector<double> expected = {0, 1, 1.5, 2, 2.5, 3, 3.5, 4};
    if (values.size() != expected.size()) {
        failures.push_back("enumeration of {1,1.5} up to 4 has the wrong size");
        return;
    }
    for (size_t i = 0; i < values.size(); ++i)
        if (std::abs(values[i] - expected[i]) > 1e-9) {
            failures.push_back("enumeration of {1,1.5} differs at index " + std::to_string(i));
            return;
        }
    Rng rng(112358);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.pick(1, 3);
        std::vector<double> atoms;
        for (int i = 0; i < n; ++i)
            atoms.push_back(rng.pick(1, 9) / static_cast<double>(rng.pick(1, 5)));
        double bound = rng.pick(0, 10) / 2.0;
        auto fast = enumerate_norms(atoms, bound);
        auto slow = enumerate_oracle(atoms, bound);
        if (fast.size() != slow.size()) {
            failures.push_back("enumeration disagrees with the oracle at trial " +
                               std::to_string(trial));
            return;
        }
        for (size_t i = 0; i < fast.size(); ++i)
            if (std::abs(fast[i] - slow[i]) > 1e-9) {
                failures.push_back("enumeration value differs at trial " + std::to_string(trial));
                return;
            }
    }
}

// 7. Monotonicity of cuts and deletions.
void criterion_monotonicity(std::vector<std::string>& failures) {
    Rng rng(271828);
    int done = 0;
    for (int trial = 0; done < 500; ++trial) {
        RandomTree t = random_tree(rng, 11, trial % 2 == 0, true);
        if (t.graph.edges.empty()) continue;
        ++done;
        Complexity whole = complexity(t.graph);
        std::vector<EdgeId> ids;
        for (const auto& [eid, _] : t.graph.edges) ids.push_back(eid);
        EdgeId pick = ids[static_cast<size_t>(rng.pick(0, (int)ids.size() - 1))];
        CutResult cut = edge_cut(t.graph, pick);
        if (compare(complexity(cut.side1), whole) != Ordering::Less ||
            compare(complexity(cut.side2), whole) != Ordering::Less) {
            failures.push_back("cut side did not strictly decrease at trial " +
                               std::to_string(trial));
            return;
        }
        // delete a random external
        auto externals = t.graph.externals();
        auto it = externals.begin();
        std::advance(it, rng.pick(0, (int)externals.size() - 1));
        AmphichiralAction a = negative_identity(t.graph);
        for (const auto& [eid, e] : t.graph.edges)
            if (a.edge_fixed(eid))
                sign_edge(a, eid, e.end_a, +1, e.end_b, -1);
        DeleteResult del = delete_component(t.graph, a, it->first);
        Ordering relation = compare(complexity(del.graph), whole);
        bool hyperbolic_host = t.graph.vertex(it->second).geometry.is_hyperbolic();
        if (relation == Ordering::Greater ||
            (hyperbolic_host && relation != Ordering::Less)) {
            failures.push_back("deletion monotonicity violated at trial " + std::to_string(trial));
            return;
        }
    }
}

// 8. Slice factorization checks.
void criterion_fox_milnor(std::vector<std::string>& failures) {
    expect(failures, !fox_milnor_factor(IntPolynomial::from({-1, 3, -1})).satisfiable,
           "the figure-eight polynomial must be rejected");
    Rng rng(314159);
    for (int trial = 0; trial < 200; ++trial) {
        int deg = rng.pick(0, 4);
        std::vector<long long> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.pick(-3, 3));
        if (coeffs.front() == 0) coeffs.front() = 2;
        if (coeffs.back() == 0) coeffs.back() = -1;
        IntPolynomial p = IntPolynomial::from(coeffs);
        IntPolynomial reversed =
            IntPolynomial::from({p.coefficients.rbegin(), p.coefficients.rend()});
        if (!fox_milnor_factor(multiply(p, reversed)).satisfiable) {
            failures.push_back("a constructed product was rejected at trial " +
                               std::to_string(trial));
            return;
        }
    }
    auto cand1 = alexander_of_splice(fixture("cand1").alexander_annotations);
    expect(failures, !fox_milnor_factor(cand1).satisfiable,
           "the first candidate's Alexander polynomial must fail the factorization, "
           "so the knot is not slice");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 fixture suite", 1.0, criterion_fixtures},
        {"2 cut/splice round trip (1000 graphs)", 5.0, criterion_round_trip},
        {"3 action sign constraints (exhaustive)", 5.0, criterion_action_constraints},
        {"4 verdict replay (1000 knots)", 30.0, criterion_verdict_replay},
        {"5 impossible elementary configurations", 5.0, criterion_impossibility},
        {"6 well-ordering harness", 5.0, criterion_well_ordering},
        {"7 complexity monotonicity (500 graphs)", 10.0, criterion_monotonicity},
        {"8 slice factorization", 10.0, criterion_fox_milnor},
    };
    bool all_passed = true;
    for (auto& criterion : criteria) {
        std::vector<std::string> failures;
        auto start = Clock::now();
        try {
            criterion.run(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (seconds > criterion.budget_seconds)
            failures.push_back("over time budget: " + std::to_string(seconds) + "s > " +
                               std::to_string(criterion.budget_seconds) + "s");
        bool passed = failures.empty();
        all_passed &= passed;
        std::printf("%s criterion %s (%.2fs)\n", passed ? "PASS" : "FAIL",
                    criterion.name.c_str(), seconds);
        for (const auto& failure : failures) std::printf("     %s\n", failure.c_str());
    }
    return all_passed ? 0 : 1;
}
