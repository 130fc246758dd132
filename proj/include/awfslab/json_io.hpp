#pragma once
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "awfslab/category.hpp"
#include "awfslab/free_cat.hpp"
#include "awfslab/graph.hpp"
#include "awfslab/ssset.hpp"

namespace awfslab {

using Json = nlohmann::json;

// Any single instance file: "kind" selects the payload.
using Instance = std::variant<FiniteGraph, FiniteCategory, SemiSimplicialSet, GraphMap, Functor,
                              SSMap>;

// Serializers emit canonical JSON values: object keys sorted (nlohmann keeps
// objects ordered by key), id arrays lexicographic, no extra whitespace when
// dumped with dump().
Json to_json(const FiniteGraph& g);
Json to_json(const FiniteCategory& c);
Json to_json(const SemiSimplicialSet& x);
Json to_json(const GraphMap& m);
Json to_json(const Functor& f);
Json to_json(const SSMap& f);
Json to_json(const Term& t);
Json to_json(const Path& p);
Json to_json(const FunctorFromFree& f);
Json to_json(const Finding& f);
Json to_json(const Instance& inst);

// Parsers throw Error("schema", ...) on malformed input. Parsing checks shape
// and reference integrity only; law-level validation is a separate concern.
FiniteGraph graph_from_json(const Json& j);
FiniteCategory category_from_json(const Json& j);
SemiSimplicialSet ssset_from_json(const Json& j);
GraphMap graph_map_from_json(const Json& j);
Functor functor_from_json(const Json& j);
SSMap ss_map_from_json(const Json& j);
Term term_from_json(const Json& j);
Path path_from_json(const Json& j);
FunctorFromFree functor_from_free_from_json(const Json& j);
Instance instance_from_json(const Json& j);

std::string instance_kind(const Instance& inst);
std::vector<Finding> validate_instance(const Instance& inst);

// Canonical text: dump + trailing newline (the on-disk/report format).
std::string canonical_text(const Json& j);
Json parse_text(const std::string& text);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace awfslab
