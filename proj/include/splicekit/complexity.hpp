#pragma once

#include <string>
#include <vector>

#include "splicekit/graph.hpp"

namespace splicekit {

// Multiset of hyperbolic volume summands; Seifert pieces contribute nothing.
struct GromovNorm {
    std::vector<VolumeAtom> terms;  // sorted by (name, value)
    double value = 0.0;
};

struct Complexity {
    GromovNorm norm;
    long long vertex_count = 0;
};

enum class Ordering { Less, Equal, Greater };

const char* ordering_name(Ordering o);

Complexity complexity(const CompanionshipGraph& graph);

// Lexicographic: norm values first (within norm_tolerance()), then vertex counts.
Ordering compare(const Complexity& a, const Complexity& b);

// All sums sum(a_i * y_i) <= bound with natural coefficients, strictly increasing,
// values within tolerance merged. Finiteness of the list is the desk-scale witness
// that such sum sets are well-ordered.
std::vector<double> enumerate_norms(const std::vector<double>& atoms, double bound);

struct DescentResult {
    enum class Kind { StabilizesAt, StrictlyDecreasingThroughout, NotDecreasing };
    Kind kind = Kind::StrictlyDecreasingThroughout;
    size_t index = 0;  // StabilizesAt only
};

// Classifies a finite complexity sequence under compare(); the engine uses it to
// assert strict decrease along certificate recursion.
DescentResult descent_check(const std::vector<Complexity>& sequence);

std::string complexity_to_string(const Complexity& c);

}  // namespace splicekit
