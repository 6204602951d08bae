#include "splicekit/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace splicekit {

const char* ordering_name(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "?";
}

Complexity complexity(const CompanionshipGraph& graph) {
    if (graph.vertices.empty())
        fail(ErrorCode::InvalidInput, "complexity of an empty graph is undefined");
    Complexity c;
    for (const auto& [vid, v] : graph.vertices) {
        if (v.geometry.is_hyperbolic())
            c.norm.terms.push_back({v.geometry.atom, graph.atoms.value(v.geometry.atom)});
    }
    std::sort(c.norm.terms.begin(), c.norm.terms.end(),
              [](const VolumeAtom& a, const VolumeAtom& b) {
                  return a.name < b.name || (a.name == b.name && a.value < b.value);
              });
    for (const auto& t : c.norm.terms) c.norm.value += t.value;
    c.vertex_count = static_cast<long long>(graph.vertices.size());
    return c;
}

Ordering compare(const Complexity& a, const Complexity& b) {
    double tol = norm_tolerance();
    if (a.norm.value < b.norm.value - tol) return Ordering::Less;
    if (a.norm.value > b.norm.value + tol) return Ordering::Greater;
    if (a.vertex_count < b.vertex_count) return Ordering::Less;
    if (a.vertex_count > b.vertex_count) return Ordering::Greater;
    return Ordering::Equal;
}

std::vector<double> enumerate_norms(const std::vector<double>& atoms, double bound) {
    if (atoms.empty()) fail(ErrorCode::InvalidInput, "atom set must be nonempty");
    for (double a : atoms)
        if (!(a > 0.0)) fail(ErrorCode::InvalidInput, "atom values must be positive");
    if (bound < 0.0) fail(ErrorCode::BoundNegative, "bound must be nonnegative");

    double tol = norm_tolerance();
    std::vector<double> out;
    // Coefficients are bounded by bound / min(atom), so this recursion is finite.
    std::function<void(size_t, double)> rec = [&](size_t idx, double acc) {
        if (idx == atoms.size()) {
            out.push_back(acc);
            return;
        }
        for (double sum = acc; sum <= bound + tol; sum += atoms[idx]) rec(idx + 1, sum);
    };
    rec(0, 0.0);
    std::sort(out.begin(), out.end());
    std::vector<double> merged;
    for (double v : out)
        if (merged.empty() || v - merged.back() > tol) merged.push_back(v);
    return merged;
}

DescentResult descent_check(const std::vector<Complexity>& sequence) {
    if (sequence.size() <= 1)
        return {DescentResult::Kind::StrictlyDecreasingThroughout, 0};
    bool all_strict = true;
    for (size_t i = 0; i + 1 < sequence.size(); ++i) {
        Ordering o = compare(sequence[i], sequence[i + 1]);
        if (o == Ordering::Less) return {DescentResult::Kind::NotDecreasing, 0};
        if (o == Ordering::Equal) all_strict = false;
    }
    if (all_strict) return {DescentResult::Kind::StrictlyDecreasingThroughout, 0};
    // Non-increasing: report where the trailing constant run begins.
    size_t idx = sequence.size() - 1;
    while (idx > 0 && compare(sequence[idx - 1], sequence[idx]) == Ordering::Equal) --idx;
    return {DescentResult::Kind::StabilizesAt, idx};
}

std::string complexity_to_string(const Complexity& c) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", c.norm.value);
    return std::string("(") + buf + ", " + std::to_string(c.vertex_count) + ")";
}

}  // namespace splicekit
