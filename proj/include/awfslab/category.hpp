#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "awfslab/graph.hpp"

namespace awfslab {

// Finite category presented by a complete composition table. "composition"
// is keyed diagrammatically: composition[{f, g}] is g∘f (f first, then g).
struct FiniteCategory {
    struct Morphism {
        std::string id;
        std::string dom;
        std::string cod;
        bool operator==(const Morphism&) const = default;
    };

    std::vector<std::string> objects;  // sorted
    std::vector<Morphism> morphisms;   // sorted by id; includes identities
    std::map<std::string, std::string> identities; // object -> morphism id
    std::map<std::pair<std::string, std::string>, std::string> composition;

    bool operator==(const FiniteCategory&) const = default;

    const Morphism* morphism(const std::string& id) const;
    bool has_object(const std::string& o) const;
    // g∘f; throws on non-composable or missing entry
    std::string compose(const std::string& f, const std::string& g) const;
    std::vector<std::string> hom(const std::string& a, const std::string& b) const;
    void sort();
};

struct Functor {
    FiniteCategory dom;
    FiniteCategory cod;
    std::map<std::string, std::string> object_map;
    std::map<std::string, std::string> morphism_map;

    bool operator==(const Functor&) const = default;
};

// Category-law validation: identity/composition totality, endpoints, unit
// laws, associativity on all composable triples. Violations are findings.
std::vector<Finding> validate_category(const FiniteCategory& c);
std::vector<Finding> validate_functor(const Functor& f);

Functor identity_functor(const FiniteCategory& c);
Functor compose(const Functor& g, const Functor& f);

FiniteGraph underlying_graph(const FiniteCategory& c);
// U applied to a functor: the graph map on underlying graphs
GraphMap underlying_graph_map(const Functor& f);

std::vector<std::vector<std::string>> pi0_cat(const FiniteCategory& c);

// All functors dom -> cod, lexicographic: object images first (sorted object
// order), then non-identity morphism images (sorted id order); identities are
// forced. Composition closure is enforced during the search.
std::vector<Functor> hom_functors(const FiniteCategory& dom, const FiniteCategory& cod);

bool surjective_on_objects(const Functor& f);
bool bijective_on_objects(const Functor& f);
bool full_functor(const Functor& f);

// Small builders.
FiniteCategory empty_category();
FiniteCategory point_category();                       // one object "pt"
FiniteCategory discrete_category(int n);               // objects d0..d{n-1}
FiniteCategory arrow_category();                       // a0 -f-> a1

struct CatCtx {
    using Object = FiniteCategory;
    using Map = Functor;

    std::vector<Map> hom(const Object& a, const Object& x) const { return hom_functors(a, x); }
    Map compose(const Map& g, const Map& f) const { return awfslab::compose(g, f); }
    Map identity(const Object& x) const { return identity_functor(x); }
    bool equal(const Map& f, const Map& g) const { return f == g; }
    const Object& dom(const Map& f) const { return f.dom; }
    const Object& cod(const Map& f) const { return f.cod; }
    bool valid(const Map& f) const { return validate_functor(f).empty(); }
    bool mono(const Map& f) const;
    std::string canon(const Map& f) const;
    std::string name() const { return "category"; }

    std::optional<Map> factor_through_mono(const Map& i, const Map& k) const;
};

} // namespace awfslab
