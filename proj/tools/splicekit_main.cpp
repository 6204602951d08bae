#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "splicekit/catalog.hpp"
#include "splicekit/complexity.hpp"
#include "splicekit/dot.hpp"
#include "splicekit/engine.hpp"
#include "splicekit/json_io.hpp"
#include "splicekit/report.hpp"

namespace sk = splicekit;

namespace {

constexpr const char* kCatalogPrefix = "catalog:";

struct LoadedInput {
    sk::CompanionshipGraph graph;
    std::optional<sk::AmphichiralAction> action;
    std::string graph_digest;
    std::string action_digest;
};

bool is_catalog_ref(const std::string& path) { return path.rfind(kCatalogPrefix, 0) == 0; }

LoadedInput load(const std::string& graph_path, const std::string& action_path) {
    LoadedInput in;
    if (is_catalog_ref(graph_path)) {
        const auto& f = sk::fixture(graph_path.substr(std::string(kCatalogPrefix).size()));
        in.graph = f.graph;
        in.action = f.action;
        in.graph_digest = sk::digest(sk::graph_to_json(f.graph).dump());
        in.action_digest = sk::digest(sk::action_to_json(f.action).dump());
        return in;
    }
    std::string text = sk::read_file(graph_path);
    in.graph = sk::graph_from_string(text);
    in.graph_digest = sk::digest(text);
    if (!action_path.empty()) {
        std::string atext = sk::read_file(action_path);
        in.action = sk::action_from_string(atext);
        in.action_digest = sk::digest(atext);
    }
    return in;
}

void apply_tolerance_env() {
    if (const char* tol = std::getenv("SPLICEKIT_TOLERANCE")) {
        char* end = nullptr;
        double value = std::strtod(tol, &end);
        if (end && *end == '\0' && value > 0) sk::set_norm_tolerance(value);
    }
}

std::vector<double> parse_decimals(const std::string& csv) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<long long> parse_ints(const std::string& csv) {
    std::vector<long long> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"splicekit: companionship-graph calculus for link splicing and "
                 "amphichiral symmetry analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_output = false;
    app.add_flag("--json", json_output, "machine-readable report output");

    std::string graph_path, action_path, emit_path, atoms_csv, coeffs_csv, catalog_name;
    double bound = 0.0;
    bool search = false, fibered = false;
    long long slack = 1;

    auto* cmd_validate = app.add_subcommand("validate", "check a graph (and optionally an action)");
    cmd_validate->add_option("graph", graph_path)->required();
    cmd_validate->add_option("action", action_path);

    auto* cmd_analyze = app.add_subcommand(
        "analyze", "edge/vertex coherence classes, companion subtree, structure decision");
    cmd_analyze->add_option("graph", graph_path)->required();
    cmd_analyze->add_option("action", action_path);
    cmd_analyze->add_flag("--fibered", fibered, "run the fibered consistency check");

    auto* cmd_certify = app.add_subcommand("certify", "verdict, bound, and proof certificate");
    cmd_certify->add_option("graph", graph_path)->required();
    cmd_certify->add_option("action", action_path);
    cmd_certify->add_option("--emit", emit_path, "write the certificate JSON to a file");
    cmd_certify->add_flag("--search", search, "explore every coherent-edge choice");

    auto* cmd_complexity = app.add_subcommand("complexity", "Gromov norm and piece count");
    cmd_complexity->add_option("graph", graph_path)->required();

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "all bounded natural-coefficient sums of the atoms");
    cmd_enumerate->add_option("--atoms", atoms_csv)->required();
    cmd_enumerate->add_option("--bound", bound)->required();

    auto* cmd_catalog = app.add_subcommand("catalog", "bundled worked examples");
    auto* cat_list = cmd_catalog->add_subcommand("list", "fixture names");
    auto* cat_show = cmd_catalog->add_subcommand("show", "print one fixture");
    cat_show->add_option("name", catalog_name)->required();
    auto* cat_run = cmd_catalog->add_subcommand("run", "run all fixtures against expectations");
    cmd_catalog->require_subcommand(1);
    (void)cat_list;
    (void)cat_run;

    auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz rendering");
    cmd_dot->add_option("graph", graph_path)->required();
    cmd_dot->add_option("action", action_path);

    auto* cmd_reduce = app.add_subcommand("reduce", "raise the action to the odd part of its order");
    cmd_reduce->add_option("graph", graph_path)->required();
    cmd_reduce->add_option("action", action_path)->required();

    auto* cmd_fox = app.add_subcommand("foxmilnor", "slice factorization search");
    cmd_fox->add_option("--coeffs", coeffs_csv)->required();
    cmd_fox->add_option("--slack", slack, "extra coefficient height for the search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_validate->parsed()) {
        LoadedInput in = load(graph_path, action_path);
        auto graph_report = sk::validate(in.graph);
        sk::ValidationReport action_report;
        if (in.action) action_report = sk::validate_action(in.graph, *in.action);
        bool ok = graph_report.valid() && action_report.valid();
        if (json_output) {
            sk::Json out;
            out["inputs"] = sk::Json{{"graph", in.graph_digest}, {"action", in.action_digest}};
            out["graph"] = sk::validation_report_to_json(graph_report);
            if (in.action) out["action"] = sk::validation_report_to_json(action_report);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "graph: " << (graph_report.valid() ? "valid" : "invalid") << " ("
                      << sk::graph_class_name(graph_report.classification) << ")\n";
            for (const auto& issue : graph_report.issues)
                std::cout << "  " << issue.rule << ": " << issue.detail << "\n";
            if (in.action) {
                std::cout << "action: " << (action_report.valid() ? "valid" : "invalid") << "\n";
                for (const auto& issue : action_report.issues)
                    std::cout << "  " << issue.rule << ": " << issue.detail << "\n";
            }
        }
        return ok ? 0 : 1;
    }

    if (cmd_analyze->parsed()) {
        LoadedInput in = load(graph_path, action_path);
        if (!in.action) throw sk::SpliceError(sk::ErrorCode::InvalidInput, "analyze needs an action");
        auto edge_classes = sk::classify_edges(in.graph, *in.action);
        auto vertex_classes = sk::classify_vertices(in.graph, *in.action);
        bool knot = in.graph.externals().size() == 1;
        std::set<sk::VertexId> gmax;
        std::optional<sk::JsjStructure> structure;
        if (knot) {
            gmax = sk::maximal_coherent_subtree(in.graph, *in.action);
            structure = sk::decide_structure(in.graph, *in.action);
        }
        sk::Json out;
        out["inputs"] = sk::Json{{"graph", in.graph_digest}, {"action", in.action_digest}};
        sk::Json ec = sk::Json::object(), vc = sk::Json::object();
        for (const auto& [eid, cls] : edge_classes) ec[eid] = sk::edge_coherence_name(cls);
        for (const auto& [vid, cls] : vertex_classes) vc[vid] = sk::vertex_coherence_name(cls);
        out["edges"] = ec;
        out["vertices"] = vc;
        if (knot) {
            out["maximal_coherent_subtree"] = std::vector<std::string>(gmax.begin(), gmax.end());
            out["structure"] = sk::structure_name(*structure);
        }
        if (fibered) {
            auto consistency = sk::check_fibered_consistency(in.graph, *in.action, true);
            sk::Json fj;
            fj["consistent"] = consistency.consistent();
            sk::Json contradictions = sk::Json::array();
            for (const auto& c : consistency.contradictions)
                contradictions.push_back(sk::Json{{"edge", c.edge}, {"detail", c.detail}});
            fj["contradictions"] = contradictions;
            if (consistency.concluded_structure)
                fj["concluded_structure"] = sk::structure_name(*consistency.concluded_structure);
            out["fibered"] = fj;
        }
        if (json_output) {
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& [eid, cls] : edge_classes)
                std::cout << "edge " << eid << ": " << sk::edge_coherence_name(cls) << "\n";
            for (const auto& [vid, cls] : vertex_classes)
                std::cout << "vertex " << vid << ": " << sk::vertex_coherence_name(cls) << "\n";
            if (knot) {
                std::cout << "maximal coherent subtree:";
                for (const auto& vid : gmax) std::cout << " " << vid;
                std::cout << "\nstructure: " << sk::structure_name(*structure) << "\n";
            }
            if (fibered && out.contains("fibered"))
                std::cout << "fibered check: "
                          << (out["fibered"]["consistent"].get<bool>() ? "consistent"
                                                                       : "contradictions found")
                          << "\n";
        }
        return 0;
    }

    if (cmd_certify->parsed()) {
        LoadedInput in = load(graph_path, action_path);
        if (!in.action) throw sk::SpliceError(sk::ErrorCode::InvalidInput, "certify needs an action");
        sk::AnalysisOptions options;
        options.search = search;
        auto result = sk::analyze_link(in.graph, *in.action, options);
        auto rep = sk::replay(result.certificate, in.graph, *in.action);
        sk::Json out;
        out["inputs"] = sk::Json{{"graph", in.graph_digest}, {"action", in.action_digest}};
        out["verdict"] = sk::verdict_to_json(result.verdict);
        out["replay"] = rep.ok ? "ok" : rep.failure;
        if (!emit_path.empty()) {
            sk::write_file(emit_path, sk::certificate_to_json(result.certificate).dump(2) + "\n");
            out["certificate_path"] = emit_path;
        } else {
            out["certificate"] = sk::certificate_to_json(result.certificate);
        }
        if (json_output) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "verdict: " << sk::verdict_name(result.verdict.kind)
                      << "  kaw_bound <= " << result.verdict.kaw_bound << "\n";
            if (!result.verdict.j0.empty()) {
                std::cout << "companion subtree:";
                for (const auto& vid : result.verdict.j0) std::cout << " " << vid;
                std::cout << "\n";
            }
            std::cout << "replay: " << (rep.ok ? "ok" : rep.failure) << "\n";
            if (!emit_path.empty()) std::cout << "certificate written to " << emit_path << "\n";
        }
        return rep.ok ? 0 : 1;
    }

    if (cmd_complexity->parsed()) {
        LoadedInput in = load(graph_path, action_path);
        auto c = sk::complexity(in.graph);
        if (json_output) {
            std::cout << sk::complexity_to_json(c).dump(2) << "\n";
        } else {
            std::cout << sk::complexity_to_string(c) << "\n";
            for (const auto& t : c.norm.terms) {
                char buf[48];
                std::snprintf(buf, sizeof(buf), "%.9f", t.value);
                std::cout << "  " << t.name << " = " << buf << "\n";
            }
        }
        return 0;
    }

    if (cmd_enumerate->parsed()) {
        auto values = sk::enumerate_norms(parse_decimals(atoms_csv), bound);
        if (json_output) {
            std::cout << sk::Json(values).dump() << "\n";
        } else {
            for (size_t i = 0; i < values.size(); ++i) {
                char buf[48];
                std::snprintf(buf, sizeof(buf), "%.9g", values[i]);
                std::cout << (i ? " " : "") << buf;
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (cmd_catalog->parsed()) {
        if (cat_list->parsed()) {
            for (const auto& f : sk::fixtures()) std::cout << f.name << "\n";
            return 0;
        }
        if (cat_show->parsed()) {
            const auto& f = sk::fixture(catalog_name);
            sk::Json out;
            out["name"] = f.name;
            out["notes"] = f.notes;
            out["graph"] = sk::graph_to_json(f.graph);
            out["action"] = sk::action_to_json(f.action);
            if (f.expected_structure) out["expected_structure"] = sk::structure_name(*f.expected_structure);
            if (f.expected_verdict) out["expected_verdict"] = sk::verdict_name(*f.expected_verdict);
            if (f.expected_bound) out["expected_bound"] = *f.expected_bound;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        bool all_passed = true;
        for (const auto& f : sk::fixtures()) {
            auto outcome = sk::run_fixture(f);
            all_passed &= outcome.passed;
            std::cout << (outcome.passed ? "PASS" : "FAIL") << " " << outcome.name << "\n";
            for (const auto& failure : outcome.failures) std::cout << "  " << failure << "\n";
        }
        return all_passed ? 0 : 1;
    }

    if (cmd_dot->parsed()) {
        LoadedInput in = load(graph_path, action_path);
        std::cout << sk::export_dot(in.graph, in.action);
        return 0;
    }

    if (cmd_reduce->parsed()) {
        LoadedInput in = load(graph_path, action_path);
        if (!in.action) throw sk::SpliceError(sk::ErrorCode::InvalidInput, "reduce needs an action");
        auto result = sk::reduce(in.graph, *in.action);
        sk::Json out;
        out["action"] = sk::action_to_json(result.action);
        out["newly_fixed"] = std::vector<std::string>(result.newly_fixed.begin(),
                                                      result.newly_fixed.end());
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (cmd_fox->parsed()) {
        auto poly = sk::IntPolynomial::from(parse_ints(coeffs_csv));
        auto result = sk::fox_milnor_factor(poly, slack);
        if (json_output) {
            sk::Json out;
            out["satisfiable"] = result.satisfiable;
            out["height_bound"] = result.height_bound;
            if (result.satisfiable) out["witness"] = result.witness.coefficients;
            std::cout << out.dump(2) << "\n";
        } else if (result.satisfiable) {
            std::cout << "satisfiable: f = " << sk::polynomial_to_string(result.witness) << "\n";
        } else {
            std::cout << "not satisfiable within coefficient height " << result.height_bound
                      << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    apply_tolerance_env();
    try {
        return run(argc, argv);
    } catch (const sk::SpliceError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
