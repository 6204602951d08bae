#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splicekit/catalog.hpp"
#include "splicekit/complexity.hpp"
#include "splicekit/dot.hpp"
#include "splicekit/engine.hpp"
#include "splicekit/json_io.hpp"
#include "splicekit/report.hpp"

namespace py = pybind11;
namespace sk = splicekit;

namespace {

// The python surface speaks JSON strings for the document types; the opaque
// holder classes keep parsed values alive across calls.
sk::CompanionshipGraph parse_graph(const std::string& text) { return sk::graph_from_string(text); }
sk::AmphichiralAction parse_action(const std::string& text) { return sk::action_from_string(text); }

std::string dump(const sk::Json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "companionship-graph calculus: splicing, complexity, amphichiral symmetry, "
              "and concordance certificates";

    py::register_exception<sk::SpliceError>(m, "SpliceError");

    py::class_<sk::CompanionshipGraph>(m, "Graph")
        .def(py::init(&parse_graph), py::arg("json_text"))
        .def("to_json", [](const sk::CompanionshipGraph& g) { return dump(sk::graph_to_json(g)); })
        .def("externals",
             [](const sk::CompanionshipGraph& g) {
                 std::vector<std::string> out;
                 for (const auto& [name, _] : g.externals()) out.push_back(name);
                 return out;
             })
        .def("vertex_count", [](const sk::CompanionshipGraph& g) { return g.vertices.size(); })
        .def("edge_count", [](const sk::CompanionshipGraph& g) { return g.edges.size(); });

    py::class_<sk::AmphichiralAction>(m, "Action")
        .def(py::init(&parse_action), py::arg("json_text"))
        .def("to_json",
             [](const sk::AmphichiralAction& a) { return dump(sk::action_to_json(a)); });

    m.def("validate", [](const sk::CompanionshipGraph& g) {
        return dump(sk::validation_report_to_json(sk::validate(g)));
    });
    m.def("validate_action", [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a) {
        return dump(sk::validation_report_to_json(sk::validate_action(g, a)));
    });
    m.def("root_of", &sk::root_of);

    m.def("edge_cut", [](const sk::CompanionshipGraph& g, const std::string& edge) {
        return dump(sk::cut_result_to_json(sk::edge_cut(g, edge)));
    });
    m.def("deduce_unlink", [](const sk::CompanionshipGraph& g, const std::vector<std::string>& subtree) {
        return sk::deduce_unlink(g, std::set<std::string>(subtree.begin(), subtree.end()));
    });

    m.def("complexity", [](const sk::CompanionshipGraph& g) {
        return dump(sk::complexity_to_json(sk::complexity(g)));
    });
    m.def("enumerate_norms", &sk::enumerate_norms, py::arg("atoms"), py::arg("bound"));

    m.def("reduce", [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a) {
        auto result = sk::reduce(g, a);
        return py::make_tuple(dump(sk::action_to_json(result.action)),
                              std::vector<std::string>(result.newly_fixed.begin(),
                                                       result.newly_fixed.end()));
    });

    m.def("classify_edges", [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a) {
        std::map<std::string, std::string> out;
        for (const auto& [eid, cls] : sk::classify_edges(g, a))
            out[eid] = sk::edge_coherence_name(cls);
        return out;
    });
    m.def("maximal_coherent_subtree",
          [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a) {
              auto gmax = sk::maximal_coherent_subtree(g, a);
              return std::vector<std::string>(gmax.begin(), gmax.end());
          });
    m.def("decide_structure", [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a) {
        return std::string(sk::structure_name(sk::decide_structure(g, a)));
    });

    m.def(
        "certify",
        [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a, bool search) {
            sk::AnalysisOptions options;
            options.search = search;
            auto result = sk::analyze_link(g, a, options);
            return dump(sk::analysis_to_json(result));
        },
        py::arg("graph"), py::arg("action"), py::arg("search") = false);

    m.def("fox_milnor_factor", [](const std::vector<long long>& coeffs, long long slack) {
        auto result = sk::fox_milnor_factor(sk::IntPolynomial::from(coeffs), slack);
        py::dict out;
        out["satisfiable"] = result.satisfiable;
        out["height_bound"] = result.height_bound;
        if (result.satisfiable) out["witness"] = result.witness.coefficients;
        return out;
    }, py::arg("coeffs"), py::arg("slack") = 1);

    m.def("export_dot", [](const sk::CompanionshipGraph& g) { return sk::export_dot(g); });
    m.def("export_dot_with_action",
          [](const sk::CompanionshipGraph& g, const sk::AmphichiralAction& a) {
              return sk::export_dot(g, a);
          });

    m.def("fixture_names", [] {
        std::vector<std::string> out;
        for (const auto& f : sk::fixtures()) out.push_back(f.name);
        return out;
    });
    m.def("fixture_graph", [](const std::string& name) {
        return dump(sk::graph_to_json(sk::fixture(name).graph));
    });
    m.def("fixture_action", [](const std::string& name) {
        return dump(sk::action_to_json(sk::fixture(name).action));
    });
    m.def("run_fixture", [](const std::string& name) {
        auto outcome = sk::run_fixture(sk::fixture(name));
        return py::make_tuple(outcome.passed, outcome.failures);
    });

    m.def("set_norm_tolerance", &sk::set_norm_tolerance);
    m.def("norm_tolerance", &sk::norm_tolerance);
}
