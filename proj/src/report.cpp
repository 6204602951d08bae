#include "splicekit/report.hpp"

#include <cstdio>

namespace splicekit {

Json complexity_to_json(const Complexity& c) {
    Json atoms = Json::array();
    for (const auto& t : c.norm.terms) atoms.push_back(Json{{"name", t.name}, {"value", t.value}});
    return Json{{"norm", c.norm.value}, {"atoms", atoms}, {"vertices", c.vertex_count}};
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["case"] = certificate_kind_name(cert.kind);
    if (!cert.edge.empty()) j["edge"] = cert.edge;
    if (!cert.vertex.empty()) j["vertex"] = cert.vertex;
    if (!cert.subtree.empty()) j["subtree"] = cert.subtree;
    j["complexity"] = complexity_to_json(cert.complexity_before);
    j["bound"] = cert.bound;
    if (!cert.empty_branches.empty()) j["empty_branches"] = cert.empty_branches;
    Json children = Json::array();
    for (const auto& child : cert.children) children.push_back(certificate_to_json(child));
    j["children"] = children;
    return j;
}

Json verdict_to_json(const Verdict& verdict) {
    Json j;
    j["kind"] = verdict_name(verdict.kind);
    j["kaw_bound"] = verdict.kaw_bound;
    if (!verdict.j0.empty()) j["j0"] = verdict.j0;
    return j;
}

Json analysis_to_json(const AnalysisResult& result) {
    return Json{{"verdict", verdict_to_json(result.verdict)},
                {"certificate", certificate_to_json(result.certificate)}};
}

std::string digest(const std::string& bytes) {
    unsigned long long hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", hash);
    return std::string("fnv1a64:") + buf;
}

}  // namespace splicekit
