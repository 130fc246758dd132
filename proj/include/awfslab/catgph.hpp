#pragma once
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "awfslab/category.hpp"
#include "awfslab/free_cat.hpp"
#include "awfslab/graph.hpp"
#include "awfslab/json_io.hpp"
#include "awfslab/lifting.hpp"
#include "awfslab/rng.hpp"

namespace awfslab {

// --- model-structure classes -------------------------------------------------

bool cat_is_weq(const Functor& f);       // bijection on path components
bool gph_is_weq(const GraphMap& f);      // bijection on path components
bool gph_is_cofibration(const GraphMap& f); // monomorphism

// The two generating left maps on the category side: the empty inclusion into
// the point and the two-point discrete inclusion into the arrow.
Functor j_cat_point();
Functor j_cat_edge();
std::vector<Functor> j_cat();

// --- the cofibrant-replacement comonad on finite categories ------------------

// Test hook: replacement images for the comultiplication (morphism id -> a
// path whose labels are level-1 paths) and/or the counit (morphism id ->
// morphism id). Entries absent from the maps keep their canonical images.
struct ComonadOverride {
    std::map<std::string, Path> delta;
    std::map<std::string, std::string> eps;
};

struct ComonadLawReport {
    struct Entry {
        std::string law;
        bool pass;
        std::string witness; // first violating generator; empty when pass
    };
    std::vector<Entry> laws;
    bool all_pass = true;
};

// Image of a generator under the comultiplication: the length-1 path on the
// edge labelled by the length-1 path on m (unless overridden).
Path delta_image(const FiniteCategory& x, const std::string& m, const ComonadOverride* ov);

// Checks, generator-wise over all morphisms of x: both counit laws,
// coassociativity at nesting depth 3, and that the counit is the identity on
// objects and surjective on morphisms.
ComonadLawReport comonad_verify(const FiniteCategory& x, const ComonadOverride* ov = nullptr);

// --- R-map structures --------------------------------------------------------

// Lifting data on a functor f : Y -> Z: a lifted object per object of Z and a
// lifted morphism per (y, alpha : f y -> f y', y').
struct RMapStructure {
    Functor f;
    std::map<std::string, std::string> object_lift;
    std::map<std::tuple<std::string, std::string, std::string>, std::string> morphism_lift;
};

std::vector<Finding> validate_rmap_structure(const RMapStructure& r);
std::vector<RMapStructure> rmap_structure_enumerate(const Functor& f, std::size_t limit);
Json rmap_to_json(const RMapStructure& r);
RMapStructure rmap_from_json(const Json& j);

struct SectionReport {
    bool structure_exists = false;
    bool section_exists = false;
    bool agree = false;
    std::size_t structure_count = 0; // capped at structure_cap
    std::size_t section_count = 0;
    std::size_t structure_cap = 0;
};

// For f bijective on objects: structures on f exist iff the underlying graph
// map has a section; both sides enumerated independently.
SectionReport rmap_iff_section(const Functor& f, std::size_t structure_cap = 256);

// --- free R-map universal property -------------------------------------------

// All functors out of the free category on `base` into `cod`, lexicographic:
// node images first, then generator images (atoms of cod).
std::vector<FunctorFromFree> enumerate_functors_from_free(const FiniteGraph& base,
                                                          const FiniteCategory& cod);

struct MediatorCertificate {
    FunctorFromFree gbar;
    bool square_ok = false;
    bool morphism_ok = false;
    std::size_t square_candidates = 0;   // candidates making only the square commute
    std::size_t morphism_candidates = 0; // candidates also preserving the lifts
    bool unique = false;
};

// The induced map out of the free R-map on g's domain into the structured map
// r, with an exhaustive uniqueness certificate.
MediatorCertificate free_rmap_mediator(const Functor& g, const RMapStructure& r);

// --- the codiagonal counterexample -------------------------------------------

GraphMap codiagonal_map(); // two isolated nodes onto the edge-free point

struct StructuralCheck {
    bool applies = false; // codomain has no edges, so every square is set-level
    bool holds = false;   // node-surjective: injections lift against it
};
StructuralCheck edge_free_codomain_check(const GraphMap& f);

struct CodiagonalReport {
    std::size_t pi0_dom = 0, pi0_cod = 0;
    bool weq = false;
    StructuralCheck shortcut;
    ProbeReport probe;
    std::string conclusion;
};
CodiagonalReport codiagonal_counterexample(int probe_nodes = 4, int probe_edges = 4);

// --- free functor on cofibrations --------------------------------------------

// Functors that are full and surjective on objects, used as right legs.
std::vector<Functor> full_surjective_probe_family();

struct FreeCofProbeReport {
    int probe_nodes = 0, probe_edges = 0;
    std::size_t monos_checked = 0, rights_checked = 0, squares_checked = 0;
    bool all_pass = true;
    std::string witness; // description of the first failing square, if any
};

// For every inclusion between probe graphs, checks that its image under the
// free-category functor lifts against every member of the probe family.
FreeCofProbeReport f_preserves_cofibrations_probe(int probe_nodes = 2, int probe_edges = 2);

// --- corpus ------------------------------------------------------------------

struct NamedCategory {
    std::string name;
    FiniteCategory cat;
};
std::vector<NamedCategory> curated_categories();

FiniteCategory random_category(Rng& rng);
FiniteGraph random_graph(Rng& rng, int max_nodes, int max_edges);

struct ComonadMutation {
    std::string name;
    FiniteCategory cat;
    ComonadOverride ov;
};
std::vector<ComonadMutation> comonad_mutations();

} // namespace awfslab
