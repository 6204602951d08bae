#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splicekit/action.hpp"
#include "splicekit/coherence.hpp"
#include "splicekit/engine.hpp"
#include "splicekit/graph.hpp"
#include "splicekit/polynomial.hpp"

namespace splicekit {

struct Fixture {
    std::string name;
    std::string notes;
    CompanionshipGraph graph;
    AmphichiralAction action;
    bool fibered = false;  // declared; enables the fibered consistency check
    // Expectations; analysis runs only when every external is reversed.
    std::optional<JsjStructure> expected_structure;       // knot graphs only
    std::optional<Verdict::Kind> expected_verdict;
    std::optional<unsigned> expected_bound;
    // Alexander annotations for the splice product rule, when declared.
    std::vector<IntPolynomial> alexander_annotations;
    std::optional<bool> expected_fox_milnor;  // of the annotation product
};

const std::vector<Fixture>& fixtures();

const Fixture& fixture(const std::string& name);

struct FixtureOutcome {
    std::string name;
    bool passed = false;
    std::vector<std::string> failures;
};

// Validates the fixture, reruns the analysis, and compares against expectations.
FixtureOutcome run_fixture(const Fixture& fixture);

}  // namespace splicekit
