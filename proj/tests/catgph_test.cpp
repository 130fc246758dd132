#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "awfslab/catgph.hpp"
#include "awfslab/error.hpp"
#include "awfslab/json_io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace awfslab;

namespace {

FiniteCategory curated(const std::string& name) {
    for (const auto& nc : curated_categories())
        if (nc.name == name) return nc.cat;
    throw std::runtime_error("no curated category named " + name);
}

Functor merge_functor() {
    Functor m;
    m.dom = curated("parallel_pair");
    m.cod = arrow_category();
    m.object_map = {{"p0", "a0"}, {"p1", "a1"}};
    m.morphism_map = {{"id_p0", "id_a0"}, {"id_p1", "id_a1"}, {"pf", "f"}, {"pg", "f"}};
    return m;
}

Functor discrete_pair_into_arrow() {
    Functor f;
    f.dom = discrete_category(2);
    f.cod = arrow_category();
    f.object_map = {{"d0", "a0"}, {"d1", "a1"}};
    f.morphism_map = {{"id_d0", "id_a0"}, {"id_d1", "id_a1"}};
    return f;
}

} // namespace

TEST_CASE("component bijectivity decides graph and functor weak equivalences") {
    CHECK(!gph_is_weq(codiagonal_map()));
    const GphCtx gctx;
    Rng rng(41);
    int agree = 0;
    for (int t = 0; t < 40; ++t) {
        const auto f = corpus::random_graph_map(rng, 4, 4);
        CHECK(gph_is_weq(f) == oracle::pi0_bijective(f.dom, f.cod, f.node_map));
        ++agree;
        CHECK(gph_is_weq(gctx.identity(f.dom)));
    }
    CHECK(agree == 40);

    for (const auto& dn : corpus::small_category_corpus(2, 2, 2))
        for (const auto& cn : corpus::small_category_corpus(2, 2, 2))
            for (const auto& F : hom_functors(dn, cn)) {
                std::map<std::string, std::string> omap(F.object_map.begin(),
                                                        F.object_map.end());
                CHECK(cat_is_weq(F) == oracle::pi0_bijective(underlying_graph(F.dom),
                                                             underlying_graph(F.cod), omap));
            }
}

TEST_CASE("graph cofibrations are exactly the monomorphisms") {
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        const auto f = corpus::random_graph_map(rng, 4, 4);
        std::set<std::string> nimg, eimg;
        for (const auto& [_, v] : f.node_map) nimg.insert(v);
        for (const auto& [_, v] : f.edge_map) eimg.insert(v);
        const bool mono =
            nimg.size() == f.node_map.size() && eimg.size() == f.edge_map.size();
        CHECK(gph_is_cofibration(f) == mono);
    }
}

TEST_CASE("the generating left maps on categories are well formed") {
    const auto J = j_cat();
    REQUIRE(J.size() == 2);
    for (const auto& j : J) {
        CHECK(validate_category(j.dom).empty());
        CHECK(validate_category(j.cod).empty());
        CHECK(validate_functor(j).empty());
    }
    CHECK(j_cat_point().dom.objects.empty());
    CHECK(j_cat_point().cod.objects.size() == 1);
    CHECK(j_cat_edge().dom.objects.size() == 2);
    CHECK(j_cat_edge().dom.morphisms.size() == 2); // identities only
    CHECK(j_cat_edge().cod.morphisms.size() == 3);
}

TEST_CASE("the replacement comonad satisfies its laws on every test category") {
    const std::set<std::string> expected = {"counit-identity-on-objects",
                                           "counit-surjective-on-morphisms", "counit-left",
                                           "counit-right", "coassociativity"};
    auto check_one = [&](const FiniteCategory& c) {
        const auto rep = comonad_verify(c);
        CHECK(rep.all_pass);
        std::set<std::string> names;
        for (const auto& l : rep.laws) {
            names.insert(l.law);
            CHECK(l.pass);
            CHECK(l.witness.empty());
        }
        CHECK(names == expected);
    };
    for (const auto& nc : curated_categories()) check_one(nc.cat);
    for (const auto& c : corpus::small_category_corpus(2, 2, 3)) check_one(c);
    Rng rng(7);
    for (int t = 0; t < 10; ++t) check_one(random_category(rng));
}

TEST_CASE("every tabulated law mutation is caught with a witness") {
    const auto muts = comonad_mutations();
    REQUIRE(muts.size() == 9);
    const std::set<std::string> expected = {
        "delta-prepend-identity", "delta-duplicate",      "delta-empty",
        "delta-wrong-generator",  "delta-append-identity", "delta-split-composite",
        "eps-swap-parallel",      "eps-collapse-parallel", "eps-to-identity"};
    std::set<std::string> names;
    for (const auto& m : muts) {
        names.insert(m.name);
        const auto rep = comonad_verify(m.cat, &m.ov);
        CHECK(!rep.all_pass);
        bool witnessed = false;
        for (const auto& l : rep.laws)
            if (!l.pass) witnessed |= !l.witness.empty();
        CHECK(witnessed);
    }
    CHECK(names == expected);
}

TEST_CASE("the two-point collapse is a trivial fibration but no weak equivalence") {
    const auto rep = codiagonal_counterexample(2, 2);
    CHECK(rep.pi0_dom == 2);
    CHECK(rep.pi0_cod == 1);
    CHECK(!rep.weq);
    CHECK(rep.shortcut.applies);
    CHECK(rep.shortcut.holds);
    CHECK(rep.probe.holds);
    CHECK(rep.probe.squares_checked == 13);
    CHECK(rep.conclusion == "trivial fibration but not a weak equivalence");

    GraphMap loopy; // an edge in the codomain disables the set-level shortcut
    loopy.dom = single_node("x");
    loopy.cod = corpus::complete_graph(1, "k").g;
    loopy.node_map = {{"x", "kn0"}};
    CHECK(!edge_free_codomain_check(loopy).applies);

    GraphMap miss;
    miss.dom = single_node("x");
    miss.cod = discrete_graph({"y0", "y1"});
    miss.node_map = {{"x", "y0"}};
    const auto sc = edge_free_codomain_check(miss);
    CHECK(sc.applies);
    CHECK(!sc.holds);
}

TEST_CASE("lifting structures on the merge functor are the two parallel choices") {
    const auto merge = merge_functor();
    const auto structs = rmap_structure_enumerate(merge, 16);
    REQUIRE(structs.size() == 2);
    for (const auto& r : structs) {
        CHECK(validate_rmap_structure(r).empty());
        const auto j = rmap_to_json(r);
        const auto back = rmap_from_json(j);
        CHECK(rmap_to_json(back) == j);
    }
    CHECK(structs[0].morphism_lift != structs[1].morphism_lift);

    auto broken = structs[0];
    broken.object_lift["a0"] = "p1"; // no longer lifts a0
    CHECK(!validate_rmap_structure(broken).empty());
}

TEST_CASE("structures exist exactly when the underlying map has a section") {
    const auto merge_rep = rmap_iff_section(merge_functor());
    CHECK(merge_rep.agree);
    CHECK(merge_rep.structure_exists);
    CHECK(merge_rep.section_exists);
    CHECK(merge_rep.structure_count == 2);
    CHECK(merge_rep.section_count == 2);

    const auto nf = rmap_iff_section(discrete_pair_into_arrow());
    CHECK(nf.agree);
    CHECK(!nf.structure_exists);
    CHECK(!nf.section_exists);

    int checked = 0;
    for (const auto& dn : corpus::small_category_corpus(2, 2, 2))
        for (const auto& cn : corpus::small_category_corpus(2, 2, 2)) {
            for (const auto& F : hom_functors(dn, cn)) {
                if (!bijective_on_objects(F)) continue;
                CHECK(rmap_iff_section(F).agree);
                ++checked;
            }
        }
    CHECK(checked > 20);
}

TEST_CASE("the mediator out of the free structured map is unique") {
    const auto merge = merge_functor();
    const auto r = rmap_structure_enumerate(merge, 4).front();
    const auto cert = free_rmap_mediator(identity_functor(arrow_category()), r);
    CHECK(cert.square_ok);
    CHECK(cert.morphism_ok);
    CHECK(cert.square_candidates == 2); // the square alone admits both parallel lifts
    CHECK(cert.morphism_candidates == 1);
    CHECK(cert.unique);
    CHECK(cert.gbar.object_map.at("a0") == "p0");
    CHECK(cert.gbar.object_map.at("a1") == "p1");

    CHECK_THROWS_AS((void)free_rmap_mediator(identity_functor(point_category()), r), Error);
}

TEST_CASE("trivial fibrations of categories agree with the lifting criterion") {
    const CatCtx cctx;
    const auto J = j_cat();
    auto agree_on = [&](const Functor& F) {
        const auto direct = is_trivial_fibration_cat(F);
        const auto rlp = has_rlp(cctx, F, J);
        CHECK(direct.holds == rlp.holds);
        return direct.holds;
    };
    CHECK(agree_on(merge_functor()));
    CHECK(!agree_on(discrete_pair_into_arrow()));
    int seen = 0, held = 0;
    for (const auto& dn : corpus::small_category_corpus(2, 2, 2))
        for (const auto& cn : corpus::small_category_corpus(2, 2, 2))
            for (const auto& F : hom_functors(dn, cn)) {
                if (++seen > 60) break;
                held += agree_on(F) ? 1 : 0;
            }
    CHECK(seen > 30);
    CHECK(held > 0);
}

TEST_CASE("the free functor sends probe inclusions to left maps") {
    for (const auto& q : full_surjective_probe_family()) {
        CHECK(validate_functor(q).empty());
        CHECK(oracle::functor_surjective_on_objects(q));
        CHECK(oracle::functor_full(q));
    }
    const auto rep = f_preserves_cofibrations_probe(2, 2);
    CHECK(rep.all_pass);
    CHECK(rep.witness.empty());
    CHECK(rep.monos_checked > 0);
    CHECK(rep.rights_checked == full_surjective_probe_family().size());
    CHECK(rep.squares_checked > 0);
}

TEST_CASE("corpus generators produce valid material") {
    Rng rng(99);
    for (int t = 0; t < 10; ++t) {
        CHECK(validate_category(random_category(rng)).empty());
        CHECK(validate_graph(random_graph(rng, 4, 5)).empty());
    }
    for (const auto& nc : curated_categories()) CHECK(validate_category(nc.cat).empty());
}
