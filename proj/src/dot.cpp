#include "splicekit/dot.hpp"

#include <cstdio>
#include <sstream>

#include "splicekit/coherence.hpp"

namespace splicekit {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string vertex_label(const CompanionshipGraph& g, const Vertex& v) {
    std::ostringstream label;
    label << v.id << "\n";
    if (v.geometry.is_hyperbolic()) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.9g", g.atoms.value(v.geometry.atom));
        label << "hyperbolic " << v.geometry.atom << "=" << buf;
    } else {
        label << "seifert fibered";
    }
    if (v.model) {
        label << "\n";
        if (v.model->is_keychain()) {
            label << "key-chain H^" << v.model->keychain().rings;
        } else if (v.model->is_seifert()) {
            const auto& s = v.model->seifert();
            label << (s.mirrored ? "mirror " : "") << "S(" << s.p << "," << s.q << "|";
            if (s.star1) label << "*1";
            if (s.star2) label << (s.star1 ? ",*2" : "*2");
            label << ")";
        } else {
            label << v.model->named().name;
            if (v.model->named().mirrored) label << " (mirror)";
        }
    }
    std::string externals;
    for (const auto& c : v.components)
        if (c.is_external()) externals += (externals.empty() ? "" : ", ") + c.id;
    if (!externals.empty()) label << "\nboundary: " << externals;
    return label.str();
}

}  // namespace

std::string export_dot(const CompanionshipGraph& graph,
                       const std::optional<AmphichiralAction>& action) {
    std::map<EdgeId, EdgeCoherence> classes;
    if (action) classes = classify_edges(graph, *action);

    std::ostringstream out;
    out << "digraph companionship {\n";
    out << "  node [shape=box];\n";
    for (const auto& [vid, v] : graph.vertices) {
        out << "  \"" << escape(vid) << "\" [label=\"" << escape(vertex_label(graph, v)) << "\"";
        if (action && action->vertex_fixed(vid)) out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& [eid, e] : graph.edges) {
        std::string attrs = "label=\"" + escape(eid) + "\"";
        std::string from = e.direction.directed ? e.direction.from : e.end_a;
        std::string to = e.direction.directed ? e.direction.to : e.end_b;
        if (!e.direction.directed) attrs += ", dir=none, style=dashed";
        if (action) {
            auto cls = classes.at(eid);
            if (cls == EdgeCoherence::CoherentlyDirected) attrs += ", arrowhead=normalnormal";
            if (cls != EdgeCoherence::NotFixed) attrs += ", penwidth=2";
        }
        out << "  \"" << escape(from) << "\" -> \"" << escape(to) << "\" [" << attrs << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace splicekit
