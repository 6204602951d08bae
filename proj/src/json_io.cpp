#include "splicekit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace splicekit {

namespace {

void expect_object(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(ErrorCode::ParseError, where + " must be an object");
}

void expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(ErrorCode::ParseError, where + " must be an array");
}

void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(ErrorCode::ParseError, where + ": unknown field '" + key + "'");
    }
}

std::string get_string(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string())
        fail(ErrorCode::ParseError, where + ": field '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

long long get_int(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        fail(ErrorCode::ParseError, where + ": field '" + key + "' must be an integer");
    return j.at(key).get<long long>();
}

bool get_bool(const Json& j, const std::string& key, const std::string& where, bool fallback,
              bool required = false) {
    if (!j.contains(key)) {
        if (required) fail(ErrorCode::ParseError, where + ": field '" + key + "' is required");
        return fallback;
    }
    if (!j.at(key).is_boolean())
        fail(ErrorCode::ParseError, where + ": field '" + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

ModelLink model_from_json(const Json& j, const std::string& where) {
    expect_object(j, where);
    check_keys(j, {"keychain", "seifert", "named"}, where);
    if (j.size() != 1) fail(ErrorCode::ParseError, where + ": model must have exactly one variant");
    if (j.contains("keychain")) {
        const Json& k = j.at("keychain");
        expect_object(k, where + ".keychain");
        check_keys(k, {"n"}, where + ".keychain");
        KeyChainModel m;
        m.rings = static_cast<int>(get_int(k, "n", where + ".keychain"));
        return ModelLink{m};
    }
    if (j.contains("seifert")) {
        const Json& s = j.at("seifert");
        expect_object(s, where + ".seifert");
        check_keys(s, {"p", "q", "x", "mirrored"}, where + ".seifert");
        SeifertModel m;
        m.p = get_int(s, "p", where + ".seifert");
        m.q = get_int(s, "q", where + ".seifert");
        if (s.contains("x")) {
            expect_array(s.at("x"), where + ".seifert.x");
            for (const auto& star : s.at("x")) {
                std::string name = star.get<std::string>();
                if (name == "star1") m.star1 = true;
                else if (name == "star2") m.star2 = true;
                else fail(ErrorCode::ParseError, where + ": x entries are 'star1'/'star2'");
            }
        }
        m.mirrored = get_bool(s, "mirrored", where + ".seifert", false);
        return ModelLink{m};
    }
    const Json& n = j.at("named");
    expect_object(n, where + ".named");
    check_keys(n, {"name", "components", "hyperbolic", "linking_matrix", "unknotted",
                   "amphichiral", "mirrored"},
               where + ".named");
    NamedModel m;
    m.name = get_string(n, "name", where + ".named");
    m.component_count = static_cast<int>(get_int(n, "components", where + ".named"));
    m.hyperbolic = get_bool(n, "hyperbolic", where + ".named", false, true);
    m.amphichiral = get_bool(n, "amphichiral", where + ".named", false);
    m.mirrored = get_bool(n, "mirrored", where + ".named", false);
    if (n.contains("linking_matrix")) {
        expect_array(n.at("linking_matrix"), where + ".named.linking_matrix");
        std::vector<std::vector<long long>> matrix;
        for (const auto& row : n.at("linking_matrix")) {
            expect_array(row, where + ".named.linking_matrix row");
            std::vector<long long> r;
            for (const auto& cell : row) {
                if (!cell.is_number_integer())
                    fail(ErrorCode::ParseError, where + ": linking matrix entries are integers");
                r.push_back(cell.get<long long>());
            }
            matrix.push_back(std::move(r));
        }
        m.linking_matrix = std::move(matrix);
    }
    if (n.contains("unknotted")) {
        expect_array(n.at("unknotted"), where + ".named.unknotted");
        std::vector<bool> flags;
        for (const auto& f : n.at("unknotted")) {
            if (!f.is_boolean())
                fail(ErrorCode::ParseError, where + ": unknotted entries are booleans");
            flags.push_back(f.get<bool>());
        }
        m.unknotted = std::move(flags);
    }
    return ModelLink{m};
}

Json model_to_json(const ModelLink& m) {
    Json j = Json::object();
    if (m.is_keychain()) {
        j["keychain"] = Json{{"n", m.keychain().rings}};
    } else if (m.is_seifert()) {
        const auto& s = m.seifert();
        Json x = Json::array();
        if (s.star1) x.push_back("star1");
        if (s.star2) x.push_back("star2");
        Json body;
        body["p"] = s.p;
        body["q"] = s.q;
        body["x"] = x;
        if (s.mirrored) body["mirrored"] = true;
        j["seifert"] = body;
    } else {
        const auto& n = m.named();
        Json body;
        body["name"] = n.name;
        body["components"] = n.component_count;
        body["hyperbolic"] = n.hyperbolic;
        if (n.amphichiral) body["amphichiral"] = true;
        if (n.mirrored) body["mirrored"] = true;
        if (n.linking_matrix) body["linking_matrix"] = *n.linking_matrix;
        if (n.unknotted) {
            Json flags = Json::array();
            for (bool f : *n.unknotted) flags.push_back(f);
            body["unknotted"] = flags;
        }
        j["named"] = body;
    }
    return j;
}

}  // namespace

CompanionshipGraph graph_from_json(const Json& doc) {
    expect_object(doc, "graph document");
    check_keys(doc, {"atoms", "vertices", "edges"}, "graph document");
    CompanionshipGraph g;

    if (doc.contains("atoms")) {
        expect_array(doc.at("atoms"), "atoms");
        for (const auto& a : doc.at("atoms")) {
            expect_object(a, "atom");
            check_keys(a, {"name", "value"}, "atom");
            if (!a.contains("value") || !a.at("value").is_number())
                fail(ErrorCode::ParseError, "atom: field 'value' must be a number");
            g.atoms.insert({get_string(a, "name", "atom"), a.at("value").get<double>()});
        }
    }

    if (!doc.contains("vertices")) fail(ErrorCode::ParseError, "graph document: 'vertices' is required");
    expect_array(doc.at("vertices"), "vertices");
    for (const auto& vj : doc.at("vertices")) {
        expect_object(vj, "vertex");
        check_keys(vj, {"id", "geometry", "components", "model", "winding"}, "vertex");
        Vertex v;
        v.id = get_string(vj, "id", "vertex");
        std::string where = "vertex '" + v.id + "'";
        if (!vj.contains("geometry")) fail(ErrorCode::ParseError, where + ": 'geometry' is required");
        const Json& geo = vj.at("geometry");
        if (geo.is_string()) {
            if (geo.get<std::string>() != "seifert")
                fail(ErrorCode::ParseError, where + ": geometry string must be 'seifert'");
            v.geometry = Geometry::seifert();
        } else {
            expect_object(geo, where + ".geometry");
            check_keys(geo, {"hyperbolic"}, where + ".geometry");
            v.geometry = Geometry::hyperbolic(get_string(geo, "hyperbolic", where + ".geometry"));
        }
        if (!vj.contains("components")) fail(ErrorCode::ParseError, where + ": 'components' is required");
        expect_array(vj.at("components"), where + ".components");
        for (const auto& cj : vj.at("components")) {
            expect_object(cj, where + " component");
            check_keys(cj, {"external", "edge", "sign"}, where + " component");
            if (cj.contains("external") == cj.contains("edge"))
                fail(ErrorCode::ParseError, where + ": component is 'external' or 'edge'");
            if (cj.contains("external")) {
                ComponentRef ref = ComponentRef::external(get_string(cj, "external", where));
                if (cj.contains("sign")) ref.sign = static_cast<int>(get_int(cj, "sign", where));
                v.components.push_back(ref);
            } else {
                if (cj.contains("sign"))
                    fail(ErrorCode::ParseError, where + ": edge components carry no sign");
                v.components.push_back(ComponentRef::edge(get_string(cj, "edge", where)));
            }
        }
        if (vj.contains("model")) v.model = model_from_json(vj.at("model"), where + ".model");
        if (vj.contains("winding")) {
            expect_object(vj.at("winding"), where + ".winding");
            for (const auto& [eid, val] : vj.at("winding").items()) {
                if (!val.is_number_integer())
                    fail(ErrorCode::ParseError, where + ": winding values are integers");
                v.winding[eid] = val.get<long long>();
            }
        }
        if (!g.vertices.emplace(v.id, std::move(v)).second)
            fail(ErrorCode::ParseError, "duplicate vertex id '" + vj.at("id").get<std::string>() + "'");
    }

    if (!doc.contains("edges")) fail(ErrorCode::ParseError, "graph document: 'edges' is required");
    expect_array(doc.at("edges"), "edges");
    for (const auto& ej : doc.at("edges")) {
        expect_object(ej, "edge");
        check_keys(ej, {"id", "endpoints", "direction"}, "edge");
        Edge e;
        e.id = get_string(ej, "id", "edge");
        std::string where = "edge '" + e.id + "'";
        if (!ej.contains("endpoints") || !ej.at("endpoints").is_array() ||
            ej.at("endpoints").size() != 2)
            fail(ErrorCode::ParseError, where + ": 'endpoints' must be a pair");
        e.end_a = ej.at("endpoints")[0].get<std::string>();
        e.end_b = ej.at("endpoints")[1].get<std::string>();
        if (!ej.contains("direction")) fail(ErrorCode::ParseError, where + ": 'direction' is required");
        const Json& dir = ej.at("direction");
        if (dir.is_string()) {
            if (dir.get<std::string>() != "undirected")
                fail(ErrorCode::ParseError, where + ": direction string must be 'undirected'");
            e.direction = EdgeDirection::undirected();
        } else {
            expect_object(dir, where + ".direction");
            check_keys(dir, {"from", "to"}, where + ".direction");
            e.direction = EdgeDirection::from_to(get_string(dir, "from", where),
                                                 get_string(dir, "to", where));
        }
        if (!g.edges.emplace(e.id, std::move(e)).second)
            fail(ErrorCode::ParseError, "duplicate edge id '" + ej.at("id").get<std::string>() + "'");
    }
    return g;
}

CompanionshipGraph graph_from_string(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorCode::ParseError, "input is not valid JSON");
    return graph_from_json(doc);
}

Json graph_to_json(const CompanionshipGraph& graph) {
    Json doc;
    Json atoms = Json::array();
    for (const auto& [name, value] : graph.atoms.entries())
        atoms.push_back(Json{{"name", name}, {"value", value}});
    doc["atoms"] = atoms;
    Json vertices = Json::array();
    for (const auto& [vid, v] : graph.vertices) {
        Json vj;
        vj["id"] = vid;
        if (v.geometry.is_hyperbolic())
            vj["geometry"] = Json{{"hyperbolic", v.geometry.atom}};
        else
            vj["geometry"] = "seifert";
        Json comps = Json::array();
        for (const auto& c : v.components) {
            Json cj;
            if (c.is_external()) {
                cj["external"] = c.id;
                if (c.sign != 0) cj["sign"] = c.sign;
            } else {
                cj["edge"] = c.id;
            }
            comps.push_back(cj);
        }
        vj["components"] = comps;
        if (v.model) vj["model"] = model_to_json(*v.model);
        if (!v.winding.empty()) {
            Json wj = Json::object();
            for (const auto& [eid, val] : v.winding) wj[eid] = val;
            vj["winding"] = wj;
        }
        vertices.push_back(vj);
    }
    doc["vertices"] = vertices;
    Json edges = Json::array();
    for (const auto& [eid, e] : graph.edges) {
        Json ej;
        ej["id"] = eid;
        ej["endpoints"] = Json::array({e.end_a, e.end_b});
        if (e.direction.directed)
            ej["direction"] = Json{{"from", e.direction.from}, {"to", e.direction.to}};
        else
            ej["direction"] = "undirected";
        edges.push_back(ej);
    }
    doc["edges"] = edges;
    return doc;
}

AmphichiralAction action_from_json(const Json& doc) {
    expect_object(doc, "action document");
    check_keys(doc, {"vertex_perm", "edge_perm", "edge_signs", "external_signs", "local_orders"},
               "action document");
    AmphichiralAction a;
    auto read_perm = [&](const char* key, std::map<std::string, std::string>& out) {
        if (!doc.contains(key)) return;
        expect_object(doc.at(key), key);
        for (const auto& [from, to] : doc.at(key).items()) {
            if (!to.is_string()) fail(ErrorCode::ParseError, std::string(key) + " values are strings");
            if (to.get<std::string>() != from) out[from] = to.get<std::string>();
        }
    };
    read_perm("vertex_perm", a.vertex_perm);
    read_perm("edge_perm", a.edge_perm);
    if (doc.contains("edge_signs")) {
        expect_object(doc.at("edge_signs"), "edge_signs");
        for (const auto& [eid, pair] : doc.at("edge_signs").items()) {
            expect_object(pair, "edge_signs['" + eid + "']");
            std::map<VertexId, int> signs;
            for (const auto& [vid, s] : pair.items()) {
                if (!s.is_number_integer())
                    fail(ErrorCode::ParseError, "edge signs are integers");
                signs[vid] = s.get<int>();
            }
            a.edge_signs[eid] = std::move(signs);
        }
    }
    if (doc.contains("external_signs")) {
        expect_object(doc.at("external_signs"), "external_signs");
        for (const auto& [name, s] : doc.at("external_signs").items()) {
            if (!s.is_number_integer()) fail(ErrorCode::ParseError, "external signs are integers");
            a.external_signs[name] = s.get<int>();
        }
    }
    if (doc.contains("local_orders")) {
        expect_object(doc.at("local_orders"), "local_orders");
        for (const auto& [vid, o] : doc.at("local_orders").items()) {
            if (!o.is_number_integer()) fail(ErrorCode::ParseError, "local orders are integers");
            a.local_orders[vid] = o.get<long long>();
        }
    }
    return a;
}

AmphichiralAction action_from_string(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorCode::ParseError, "input is not valid JSON");
    return action_from_json(doc);
}

Json action_to_json(const AmphichiralAction& action) {
    Json doc;
    Json vp = Json::object(), ep = Json::object();
    for (const auto& [from, to] : action.vertex_perm) vp[from] = to;
    for (const auto& [from, to] : action.edge_perm) ep[from] = to;
    doc["vertex_perm"] = vp;
    doc["edge_perm"] = ep;
    Json es = Json::object();
    for (const auto& [eid, pair] : action.edge_signs) {
        Json pj = Json::object();
        for (const auto& [vid, s] : pair) pj[vid] = s;
        es[eid] = pj;
    }
    doc["edge_signs"] = es;
    Json xs = Json::object();
    for (const auto& [name, s] : action.external_signs) xs[name] = s;
    doc["external_signs"] = xs;
    Json lo = Json::object();
    for (const auto& [vid, o] : action.local_orders) lo[vid] = o;
    doc["local_orders"] = lo;
    return doc;
}

Json cut_result_to_json(const CutResult& cut) {
    Json doc;
    doc["side1"] = graph_to_json(cut.side1);
    doc["side2"] = graph_to_json(cut.side2);
    doc["cut_edge"] = cut.cut_edge;
    Json dc = Json::array();
    for (const auto& eid : cut.undirected_by_dc) dc.push_back(eid);
    doc["undirected_by_dc"] = dc;
    return doc;
}

Json validation_report_to_json(const ValidationReport& report) {
    Json doc;
    doc["valid"] = report.valid();
    doc["classification"] = graph_class_name(report.classification);
    Json issues = Json::array();
    for (const auto& issue : report.issues)
        issues.push_back(Json{{"rule", issue.rule}, {"detail", issue.detail}});
    doc["violations"] = issues;
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << content;
}

}  // namespace splicekit
