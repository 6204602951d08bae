#include <doctest.h>

#include "splicekit/catalog.hpp"
#include "splicekit/dot.hpp"
#include "splicekit/json_io.hpp"
#include "splicekit/polynomial.hpp"
#include "support/helpers.hpp"

using namespace splicekit;
using namespace sktest;

TEST_CASE("the catalog ships the expected fixtures") {
    std::set<std::string> names;
    for (const auto& f : fixtures()) names.insert(f.name);
    for (const char* required : {"grp_knot", "grp_link", "max_special", "cand1", "cand2",
                                 "hopf_keychain", "satellite_fibered"})
        CHECK(names.count(required) == 1);

    CHECK(fixture("cand1").expected_structure == JsjStructure::Neither);
    CHECK(fixture("max_special").expected_structure == JsjStructure::ProperlyIncoherent);
    CHECK(fixture("grp_knot").graph.vertices.size() == 5);
    CHECK(root_of(fixture("grp_knot").graph) == "compose");
}

TEST_CASE("every fixture validates and meets its expectations") {
    for (const auto& f : fixtures()) {
        CHECK(validate(f.graph).valid());
        CHECK(validate_action(f.graph, f.action).valid());
        auto outcome = run_fixture(f);
        CHECK(outcome.passed);
        for (const auto& failure : outcome.failures) MESSAGE(f.name << ": " << failure);
    }
}

TEST_CASE("trivial and constructed factorizations are found") {
    auto unit = fox_milnor_factor(IntPolynomial::from({1}));
    CHECK(unit.satisfiable);
    REQUIRE(unit.witness.coefficients.size() == 1);
    CHECK(std::abs(unit.witness.coefficients.front()) == 1);

    // (2-t)(2-1/t) normalized
    auto constructed = fox_milnor_factor(IntPolynomial::from({-2, 5, -2}));
    CHECK(constructed.satisfiable);
    auto check = multiply(constructed.witness,
                          IntPolynomial::from({constructed.witness.coefficients.rbegin(),
                                               constructed.witness.coefficients.rend()}));
    bool plus = check.coefficients == std::vector<long long>{-2, 5, -2};
    std::vector<long long> negated;
    for (long long c : check.coefficients) negated.push_back(-c);
    CHECK((plus || negated == std::vector<long long>{-2, 5, -2}));
}

TEST_CASE("the figure-eight polynomial admits no factorization in bounds") {
    // a degree-one factor a+bt would need a*b = -1 and a^2+b^2 = 3, impossible
    auto result = fox_milnor_factor(IntPolynomial::from({-1, 3, -1}));
    CHECK_FALSE(result.satisfiable);
    CHECK(result.height_bound == 4);
}

TEST_CASE("products with their reversal are always satisfiable") {
    Rng rng(1029);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = rng.pick(0, 4);
        std::vector<long long> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.pick(-3, 3));
        if (coeffs.front() == 0) coeffs.front() = 1;
        if (coeffs.back() == 0) coeffs.back() = -2;
        IntPolynomial p = IntPolynomial::from(coeffs);
        IntPolynomial reversed =
            IntPolynomial::from({p.coefficients.rbegin(), p.coefficients.rend()});
        IntPolynomial product = multiply(p, reversed);
        CHECK(fox_milnor_factor(product).satisfiable);
    }
}

TEST_CASE("asymmetric coefficient lists are rejected") {
    CHECK_THROWS_AS(fox_milnor_factor(IntPolynomial::from({1, 2, 3})), SpliceError);
    CHECK_THROWS_AS(fox_milnor_factor(IntPolynomial::from({0})), SpliceError);
}

TEST_CASE("the splice product rule multiplies the declared polynomials") {
    // computed by hand: (1-t+t^2)^2 * (-1+3t-t^2)
    auto product = alexander_of_splice(fixture("cand1").alexander_annotations);
    CHECK(product.coefficients == std::vector<long long>{-1, 5, -10, 13, -10, 5, -1});
    CHECK_FALSE(fox_milnor_factor(product).satisfiable);  // hence not slice

    auto single = alexander_of_splice({IntPolynomial::from({-1, 3, -1})});
    CHECK(single.coefficients == std::vector<long long>{-1, 3, -1});

    auto trivial = alexander_of_splice(
        {IntPolynomial::from({1}), IntPolynomial::from({1}), IntPolynomial::from({1})});
    CHECK(trivial.coefficients == std::vector<long long>{1});

    CHECK_THROWS_AS(alexander_of_splice({}), SpliceError);
}

TEST_CASE("fixture JSON survives a parse cycle through the public schema") {
    for (const auto& f : fixtures()) {
        auto g2 = graph_from_json(graph_to_json(f.graph));
        CHECK(same_graph(f.graph, g2));
    }
}

TEST_CASE("graphviz rendering: arrow styles encode direction and coherence") {
    const auto& knot = fixture("grp_knot");
    std::string dot = export_dot(knot.graph, knot.action);
    CHECK(dot.find("arrowhead=normalnormal") != std::string::npos);  // coherent seams doubled
    CHECK(dot.find("\"tref\" -> \"compose\"") != std::string::npos);
    CHECK(dot.find("style=dashed") == std::string::npos);
    CHECK(dot == export_dot(knot.graph, knot.action));  // deterministic

    const auto& link = fixture("grp_link");
    std::string link_dot = export_dot(link.graph, link.action);
    CHECK(link_dot.find("dir=none, style=dashed") != std::string::npos);  // undirected seam

    std::string plain = export_dot(link.graph);
    CHECK(plain.find("arrowhead=normalnormal") == std::string::npos);
}
