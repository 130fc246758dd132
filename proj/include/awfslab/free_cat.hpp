#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awfslab/category.hpp"
#include "awfslab/graph.hpp"

namespace awfslab {

// Morphism terms of iterated free categories. A level-1 morphism over a base
// graph is a Path whose labels are atoms (edge ids). Applying the free/
// underlying construction again yields paths whose labels are themselves
// paths; depth is capped by configuration (3 is enough for coassociativity).
struct Term;

struct Path {
    std::string src;
    std::string tgt;
    std::vector<Term> labels; // composable left-to-right (labels[0] starts at src)
};

struct Term {
    std::string atom;          // meaningful when path is empty
    std::optional<Path> path;  // set for nested labels
};

Term atom_term(std::string id);
Term path_term(Path p);
bool is_atom(const Term& t);
bool operator==(const Term& a, const Term& b);
bool operator==(const Path& a, const Path& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
inline bool operator!=(const Path& a, const Path& b) { return !(a == b); }

int term_depth(const Term& t);     // atoms have depth 0
int path_depth(const Path& p);     // 1 + max label depth (1 for atom paths)
constexpr int kMaxNesting = 3;

// Bracketed rendering, e.g. [[m1,m2],[m3]]; empty paths render as [].
std::string to_string(const Path& p);
std::string to_string(const Term& t);

Path empty_path(const std::string& at);
Path singleton_path(const std::string& src, const std::string& tgt, Term label);
// diagrammatic concatenation; requires p.tgt == q.src
Path concat(const Path& p, const Path& q);

// Free category on a graph; morphisms are materialized on demand.
struct FreeCategory {
    FiniteGraph base;
    bool operator==(const FreeCategory&) const = default;
};

FreeCategory free_category(const FiniteGraph& g);

bool graph_has_directed_cycle(const FiniteGraph& g);

// All paths src -> tgt in shortlex order (length first, then edge-id sequence).
// A missing bound on a cyclic base is an error ("unbounded-homset").
std::vector<Path> enumerate_paths(const FreeCategory& fc, const std::string& src,
                                  const std::string& tgt, std::optional<std::size_t> max_len);

// Finite graph of all paths of length <= max_len (the bounded underlying graph
// of the free category); edge ids are canonical renderings.
FiniteGraph free_truncation_graph(const FreeCategory& fc, std::size_t max_len);
std::string truncation_edge_id(const Path& p);

// Unit of the free/underlying adjunction into the length-1 truncation: nodes
// map identically, each edge to its length-1 path.
GraphMap unit_eta(const FiniteGraph& g);

// The free category on an acyclic graph materialized as a FiniteCategory with
// a complete composition table; errors on a cyclic base.
FiniteCategory finite_free_category(const FiniteGraph& g);

// Functor out of a free category, determined by generator images. The codomain
// is either a finite category (atom images) or another free category (path
// images); which one is a property of the use site.
struct FunctorFromFree {
    std::map<std::string, std::string> object_map;   // base node -> codomain object
    std::map<std::string, Term> generator_map;       // base edge id -> codomain morphism
    bool operator==(const FunctorFromFree&) const = default;
};

std::vector<Finding> validate_functor_from_free_cat(const FunctorFromFree& f,
                                                    const FiniteGraph& base,
                                                    const FiniteCategory& cod);

// Evaluation on a level-1 path, composing in a finite codomain category.
std::string eval_in_category(const FunctorFromFree& f, const FiniteCategory& cod, const Path& p);
// Evaluation when generator images are paths (free codomain): concatenation.
Path eval_in_free(const FunctorFromFree& f, const Path& p);

// Counit: free category on the underlying graph -> the category itself.
// Identity on objects, each generator (= morphism) to itself; evaluation on a
// path composes in the category.
FunctorFromFree counit_eps(const FiniteCategory& c);

} // namespace awfslab
