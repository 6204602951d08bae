#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splicekit/action.hpp"
#include "splicekit/coherence.hpp"
#include "splicekit/complexity.hpp"
#include "splicekit/graph.hpp"
#include "splicekit/ops.hpp"

namespace splicekit {

struct Verdict {
    enum class Kind { Slice, StronglyNegAmphichiral, ConcordantToSnack, RationallySlice };
    Kind kind = Kind::Slice;
    unsigned kaw_bound = 0;  // upper bound on the number of rational-ball summands needed
    std::vector<VertexId> j0;  // ConcordantToSnack: vertices of the companion subtree
};

const char* verdict_name(Verdict::Kind kind);

// One node of the replayable proof tree. The guards baked into each kind are
// mutually exclusive, so replay() can re-check that exactly the recorded kind
// applies at every node.
struct Certificate {
    enum class Kind {
        NoFixedEdges,        // elementary piece: strongly amphichiral by direct construction
        CoherentCut,         // cut a coherently directed fixed edge, recurse on both parts
        UndirectedCut,       // cut a fixed undirected edge from its reversed endpoint
        IncoherentSinkCut,   // all fixed edges incoherent: cut around an all-entering vertex
        IncoherentRootShortcut,  // knot with incoherent root is slice
        CoherentRootShortcut,    // totally coherent / properly incoherent knot shortcuts
    };
    Kind kind = Kind::NoFixedEdges;
    EdgeId edge;                       // CoherentCut / UndirectedCut
    VertexId vertex;                   // IncoherentSinkCut center / shortcut root
    std::vector<VertexId> subtree;     // sink-cut piece or companion subtree
    Complexity complexity_before;      // of this node's graph
    unsigned bound = 0;
    std::vector<std::string> empty_branches;  // deletions that emptied the remaining link
    std::vector<Certificate> children;        // in replay order, each strictly smaller
};

const char* certificate_kind_name(Certificate::Kind kind);

struct AnalysisResult {
    Verdict verdict;
    Certificate certificate;
};

struct AnalysisOptions {
    bool search = false;       // explore every coherent-edge choice, keep the best bound
    unsigned node_budget = 20000;
};

// Full case analysis for a reduced negative amphichiral link. Knot graphs are
// routed through the knot shortcuts so every input has one deterministic
// analysis path.
AnalysisResult analyze_link(const CompanionshipGraph& graph, const AmphichiralAction& action,
                            const AnalysisOptions& options = {});

// Knot analysis: incoherent root => slice; totally coherent => strongly negative
// amphichiral; properly incoherent => concordant to the companion subtree's knot;
// otherwise the link case machinery runs.
AnalysisResult analyze_knot(const CompanionshipGraph& graph, const AmphichiralAction& action,
                            const AnalysisOptions& options = {});

struct ElementaryReport {
    enum class Branch { KeyChain, SeifertLabel, Hyperbolic, Unlabeled };
    Branch branch = Branch::Unlabeled;
    bool core_reversed = false;        // key-chain branch
    bool fix_is_two_points = false;    // reversed-core construction: Fix = two points
    long long local_order = 0;         // hyperbolic branch (declared or inferred; 0 unknown)
    std::vector<std::string> notes;
};

// Decision procedure for a reduced action fixing exactly one vertex and no edges,
// with the preserved-and-edge-indexed sublink deducibly unlinked. Configurations
// the construction cannot realize raise ImpossibleConfiguration with the violated
// rule; unmet hypotheses raise HypothesesNotMet.
ElementaryReport check_elementary(const CompanionshipGraph& graph, const AmphichiralAction& action,
                                  const VertexId& vertex);

struct DeleteResult {
    CompanionshipGraph graph;
    AmphichiralAction action;
};

// Removes an external component. A hyperbolic host's volume atom is replaced by a
// fresh strictly smaller one (or a supplied replacement value), so the complexity
// strictly decreases there and never increases elsewhere.
DeleteResult delete_component(const CompanionshipGraph& graph, const AmphichiralAction& action,
                              const ExternalName& external,
                              std::optional<double> replacement_volume = std::nullopt);

struct ReplayOutcome {
    bool ok = true;
    std::string failure;  // first failing node and reason
};

// Re-executes every certificate step's guard, side conditions, decomposition and
// complexity comparisons against the given input.
ReplayOutcome replay(const Certificate& certificate, const CompanionshipGraph& graph,
                     const AmphichiralAction& action);

}  // namespace splicekit
