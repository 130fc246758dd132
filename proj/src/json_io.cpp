#include "awfslab/json_io.hpp"

#include <fstream>

#include "awfslab/error.hpp"

namespace awfslab {

namespace {

const Json& need(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw Error("schema", std::string("missing field \"") + field + "\"");
    return j.at(field);
}

std::string need_string(const Json& j, const char* field) {
    const Json& v = need(j, field);
    if (!v.is_string()) throw Error("schema", std::string("field \"") + field + "\" must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_array(const Json& v, const char* what) {
    if (!v.is_array()) throw Error("schema", std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) throw Error("schema", std::string(what) + " entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::map<std::string, std::string> string_map(const Json& v, const char* what) {
    if (!v.is_object()) throw Error("schema", std::string(what) + " must be an object");
    std::map<std::string, std::string> out;
    for (const auto& [k, x] : v.items()) {
        if (!x.is_string()) throw Error("schema", std::string(what) + " values must be strings");
        out[k] = x.get<std::string>();
    }
    return out;
}

void expect_kind(const Json& j, const std::string& kind) {
    if (need_string(j, "kind") != kind)
        throw Error("schema", "expected kind \"" + kind + "\"");
}

} // namespace

Json to_json(const FiniteGraph& g) {
    FiniteGraph s = g;
    s.sort();
    Json j;
    j["kind"] = "graph";
    j["nodes"] = s.nodes;
    Json edges = Json::array();
    for (const auto& e : s.edges)
        edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
    j["edges"] = edges;
    return j;
}

Json to_json(const FiniteCategory& c) {
    FiniteCategory s = c;
    s.sort();
    Json j;
    j["kind"] = "category";
    j["nodes"] = s.objects;
    Json edges = Json::array();
    for (const auto& m : s.morphisms)
        edges.push_back({{"id", m.id}, {"src", m.dom}, {"tgt", m.cod}});
    j["edges"] = edges;
    j["identities"] = s.identities;
    Json comp = Json::array();
    for (const auto& [key, r] : s.composition)
        comp.push_back({{"first", key.first}, {"second", key.second}, {"result", r}});
    j["composition"] = comp;
    return j;
}

Json to_json(const SemiSimplicialSet& x) {
    SemiSimplicialSet s = x;
    s.sort();
    Json j;
    j["kind"] = "ssset";
    j["dim"] = s.dim;
    Json cells = Json::object();
    Json faces = Json::object();
    for (int m = 0; m <= s.dim; ++m) {
        cells[std::to_string(m)] = s.cells[m];
        if (m >= 1) {
            Json level = Json::object();
            for (const auto& c : s.cells[m]) {
                auto it = s.faces[m].find(c);
                if (it != s.faces[m].end()) level[c] = it->second;
            }
            faces[std::to_string(m)] = level;
        }
    }
    j["cells"] = cells;
    j["faces"] = faces;
    return j;
}

Json to_json(const GraphMap& m) {
    Json j;
    j["kind"] = "graph_map";
    j["dom"] = to_json(m.dom);
    j["cod"] = to_json(m.cod);
    j["node_map"] = m.node_map;
    j["edge_map"] = m.edge_map;
    return j;
}

Json to_json(const Functor& f) {
    Json j;
    j["kind"] = "functor";
    j["dom"] = to_json(f.dom);
    j["cod"] = to_json(f.cod);
    j["object_map"] = f.object_map;
    j["morphism_map"] = f.morphism_map;
    return j;
}

Json to_json(const SSMap& f) {
    Json j;
    j["kind"] = "ss_map";
    j["dom"] = to_json(f.dom);
    j["cod"] = to_json(f.cod);
    Json levels = Json::object();
    for (int m = 0; m < static_cast<int>(f.level_map.size()); ++m)
        levels[std::to_string(m)] = f.level_map[m];
    j["level_map"] = levels;
    return j;
}

Json to_json(const Term& t) {
    if (is_atom(t)) return t.atom;
    return to_json(*t.path);
}

Json to_json(const Path& p) {
    Json j;
    j["src"] = p.src;
    j["tgt"] = p.tgt;
    Json labels = Json::array();
    for (const auto& l : p.labels) labels.push_back(to_json(l));
    j["labels"] = labels;
    return j;
}

Json to_json(const FunctorFromFree& f) {
    Json j;
    j["kind"] = "functor_from_free";
    j["object_map"] = f.object_map;
    Json gens = Json::object();
    for (const auto& [g, t] : f.generator_map) gens[g] = to_json(t);
    j["generator_map"] = gens;
    return j;
}

Json to_json(const Finding& f) {
    Json j;
    j["kind"] = f.kind;
    for (const auto& [k, v] : f.detail) j[k] = v;
    return j;
}

Json to_json(const Instance& inst) {
    return std::visit([](const auto& x) { return to_json(x); }, inst);
}

FiniteGraph graph_from_json(const Json& j) {
    expect_kind(j, "graph");
    FiniteGraph g;
    g.nodes = string_array(need(j, "nodes"), "nodes");
    for (const auto& e : need(j, "edges")) {
        if (!e.is_object()) throw Error("schema", "edges entries must be objects");
        g.edges.push_back({need_string(e, "id"), need_string(e, "src"), need_string(e, "tgt")});
    }
    g.sort();
    return g;
}

FiniteCategory category_from_json(const Json& j) {
    expect_kind(j, "category");
    FiniteCategory c;
    c.objects = string_array(need(j, "nodes"), "nodes");
    for (const auto& e : need(j, "edges")) {
        if (!e.is_object()) throw Error("schema", "edges entries must be objects");
        c.morphisms.push_back({need_string(e, "id"), need_string(e, "src"), need_string(e, "tgt")});
    }
    c.identities = string_map(need(j, "identities"), "identities");
    for (const auto& e : need(j, "composition")) {
        if (!e.is_object()) throw Error("schema", "composition entries must be objects");
        c.composition[{need_string(e, "first"), need_string(e, "second")}] =
            need_string(e, "result");
    }
    c.sort();
    return c;
}

SemiSimplicialSet ssset_from_json(const Json& j) {
    expect_kind(j, "ssset");
    SemiSimplicialSet x;
    const Json& d = need(j, "dim");
    if (!d.is_number_integer()) throw Error("schema", "dim must be an integer");
    x.dim = d.get<int>();
    if (x.dim < 0) throw Error("schema", "dim must be non-negative");
    x.cells.resize(x.dim + 1);
    x.faces.resize(x.dim + 1);
    for (const auto& [key, level] : need(j, "cells").items()) {
        int m = std::stoi(key);
        if (m < 0 || m > x.dim) throw Error("schema", "cell level out of range");
        x.cells[m] = string_array(level, "cells level");
    }
    for (const auto& [key, level] : need(j, "faces").items()) {
        int m = std::stoi(key);
        if (m < 1 || m > x.dim) throw Error("schema", "face level out of range");
        for (const auto& [c, fs] : level.items()) x.faces[m][c] = string_array(fs, "faces");
    }
    x.sort();
    return x;
}

GraphMap graph_map_from_json(const Json& j) {
    expect_kind(j, "graph_map");
    GraphMap m;
    m.dom = graph_from_json(need(j, "dom"));
    m.cod = graph_from_json(need(j, "cod"));
    m.node_map = string_map(need(j, "node_map"), "node_map");
    m.edge_map = string_map(need(j, "edge_map"), "edge_map");
    return m;
}

Functor functor_from_json(const Json& j) {
    expect_kind(j, "functor");
    Functor f;
    f.dom = category_from_json(need(j, "dom"));
    f.cod = category_from_json(need(j, "cod"));
    f.object_map = string_map(need(j, "object_map"), "object_map");
    f.morphism_map = string_map(need(j, "morphism_map"), "morphism_map");
    return f;
}

SSMap ss_map_from_json(const Json& j) {
    expect_kind(j, "ss_map");
    SSMap f;
    f.dom = ssset_from_json(need(j, "dom"));
    f.cod = ssset_from_json(need(j, "cod"));
    f.level_map.resize(f.dom.dim + 1);
    for (const auto& [key, level] : need(j, "level_map").items()) {
        int m = std::stoi(key);
        if (m < 0 || m > f.dom.dim) throw Error("schema", "level_map level out of range");
        f.level_map[m] = string_map(level, "level_map level");
    }
    return f;
}

Term term_from_json(const Json& j) {
    if (j.is_string()) return atom_term(j.get<std::string>());
    return path_term(path_from_json(j));
}

Path path_from_json(const Json& j) {
    if (!j.is_object()) throw Error("schema", "path must be an object");
    Path p;
    p.src = need_string(j, "src");
    p.tgt = need_string(j, "tgt");
    for (const auto& l : need(j, "labels")) p.labels.push_back(term_from_json(l));
    return p;
}

FunctorFromFree functor_from_free_from_json(const Json& j) {
    FunctorFromFree f;
    f.object_map = string_map(need(j, "object_map"), "object_map");
    for (const auto& [g, t] : need(j, "generator_map").items())
        f.generator_map[g] = term_from_json(t);
    return f;
}

Instance instance_from_json(const Json& j) {
    const std::string kind = need_string(j, "kind");
    if (kind == "graph") return graph_from_json(j);
    if (kind == "category") return category_from_json(j);
    if (kind == "ssset") return ssset_from_json(j);
    if (kind == "graph_map") return graph_map_from_json(j);
    if (kind == "functor") return functor_from_json(j);
    if (kind == "ss_map") return ss_map_from_json(j);
    throw Error("schema", "unknown kind \"" + kind + "\"");
}

std::string instance_kind(const Instance& inst) {
    struct V {
        std::string operator()(const FiniteGraph&) { return "graph"; }
        std::string operator()(const FiniteCategory&) { return "category"; }
        std::string operator()(const SemiSimplicialSet&) { return "ssset"; }
        std::string operator()(const GraphMap&) { return "graph_map"; }
        std::string operator()(const Functor&) { return "functor"; }
        std::string operator()(const SSMap&) { return "ss_map"; }
    };
    return std::visit(V{}, inst);
}

std::vector<Finding> validate_instance(const Instance& inst) {
    struct V {
        std::vector<Finding> operator()(const FiniteGraph& g) { return validate_graph(g); }
        std::vector<Finding> operator()(const FiniteCategory& c) { return validate_category(c); }
        std::vector<Finding> operator()(const SemiSimplicialSet& x) { return validate_ssset(x); }
        std::vector<Finding> operator()(const GraphMap& m) { return validate_graph_map(m); }
        std::vector<Finding> operator()(const Functor& f) { return validate_functor(f); }
        std::vector<Finding> operator()(const SSMap& f) { return validate_ss_map(f); }
    };
    return std::visit(V{}, inst);
}

std::string canonical_text(const Json& j) { return j.dump() + "\n"; }

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error("schema", std::string("JSON parse error: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_text(text);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot write file: " + path);
    out << canonical_text(j);
}

} // namespace awfslab
