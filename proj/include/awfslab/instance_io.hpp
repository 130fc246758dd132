#pragma once
#include <string>
#include <utility>
#include <vector>

#include "awfslab/error.hpp"
#include "awfslab/jfib.hpp"
#include "awfslab/json_io.hpp"

namespace awfslab {

// Per-instance-category glue shared by the command layer, the fixture
// generator and the bindings.
struct GphIo {
    using Ctx = GphCtx;
    using Obj = FiniteGraph;
    using Map = GraphMap;
    static constexpr const char* space = "graph";
};
struct CatIo {
    using Ctx = CatCtx;
    using Obj = FiniteCategory;
    using Map = Functor;
    static constexpr const char* space = "category";
};
struct SSIo {
    using Ctx = SSCtx;
    using Obj = SemiSimplicialSet;
    using Map = SSMap;
    static constexpr const char* space = "ssset";
};

inline std::string json_kind(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw Error("schema", "expected an instance object with a \"kind\" field");
    return j.at("kind").get<std::string>();
}

// Parse, dispatch on kind, and insist the result is both the expected type
// and structurally valid.
template <class T>
T typed_from_json(const Json& j, const char* role) {
    const Instance inst = instance_from_json(j);
    if (!std::holds_alternative<T>(inst))
        throw Error("schema", std::string(role) + ": unexpected kind " + instance_kind(inst));
    const auto findings = validate_instance(inst);
    if (!findings.empty())
        throw Error("invalid-input",
                    std::string(role) + ": " + findings.front().kind + " (and " +
                        std::to_string(findings.size() - 1) + " more)");
    return std::get<T>(inst);
}

template <class T>
T load_typed(const std::string& path, const char* role) {
    return typed_from_json<T>(load_json_file(path), role);
}

template <class M>
std::vector<M> load_map_list(const std::string& path, const char* role) {
    const Json j = load_json_file(path);
    if (!j.is_array()) throw Error("schema", std::string(role) + ": expected a JSON array of maps");
    std::vector<M> out;
    for (const auto& e : j) out.push_back(typed_from_json<M>(e, role));
    return out;
}

// File format for a carrier with chosen extensions: the carrier, the
// generating maps, and one (j, a) -> ext entry per chooser key.
template <class Io>
Json jfib_to_json(const JFibObject<typename Io::Ctx>& x) {
    Json j;
    j["kind"] = "jfib";
    j["space"] = Io::space;
    j["carrier"] = to_json(x.carrier);
    Json gens = Json::array();
    for (const auto& g : x.generators) gens.push_back(to_json(g));
    j["generators"] = gens;
    Json ch = Json::array();
    for (const auto& [key, e] : x.chooser)
        ch.push_back({{"j", key.first}, {"a", to_json(e.a)}, {"ext", to_json(e.ext)}});
    j["chooser"] = ch;
    return j;
}

template <class Io>
JFibObject<typename Io::Ctx> jfib_from_json(const Json& j, const char* role) {
    typename Io::Ctx ctx;
    if (!j.is_object() || json_kind(j) != "jfib")
        throw Error("schema", std::string(role) + ": expected kind \"jfib\"");
    if (!j.contains("space") || !j.at("space").is_string() ||
        j.at("space").get<std::string>() != Io::space)
        throw Error("schema", std::string(role) + ": space does not match the supplied maps");
    JFibObject<typename Io::Ctx> x;
    x.carrier = typed_from_json<typename Io::Obj>(j.at("carrier"), role);
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw Error("schema", std::string(role) + ": missing generators array");
    for (const auto& g : j.at("generators"))
        x.generators.push_back(typed_from_json<typename Io::Map>(g, role));
    if (!j.contains("chooser") || !j.at("chooser").is_array())
        throw Error("schema", std::string(role) + ": missing chooser array");
    for (const auto& e : j.at("chooser")) {
        if (!e.is_object() || !e.contains("j") || !e.contains("a") || !e.contains("ext"))
            throw Error("schema", std::string(role) + ": chooser entries need j, a, ext");
        if (!e.at("j").is_number_integer())
            throw Error("schema", std::string(role) + ": chooser index must be an integer");
        const int idx = e.at("j").get<int>();
        auto am = typed_from_json<typename Io::Map>(e.at("a"), role);
        auto em = typed_from_json<typename Io::Map>(e.at("ext"), role);
        const auto key = chooser_key(ctx, idx, am);
        if (x.chooser.count(key))
            throw Error("schema", std::string(role) + ": duplicate chooser entry");
        x.chooser[key] = {std::move(am), std::move(em)};
    }
    return x;
}

} // namespace awfslab
