#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "awfslab/catgph.hpp"
#include "awfslab/error.hpp"
#include "awfslab/lifting.hpp"
#include "awfslab/rng.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace awfslab;

TEST_CASE("square validation pinpoints the defect") {
    const GphCtx ctx;
    const FiniteGraph pt = single_node("x0");
    const FiniteGraph d2 = discrete_graph({"u0", "u1"});
    GraphMap top;
    top.dom = empty_graph();
    top.cod = pt;
    GraphMap bottom;
    bottom.dom = single_node("pt");
    bottom.cod = d2;
    bottom.node_map = {{"pt", "u0"}};
    const Square<GphCtx> ok{corpus::gen_gph_node(), unique_map_to_terminal(pt), top,
                            unique_map_to_terminal(single_node("pt"))};
    CHECK(!square_defect(ctx, ok).has_value());

    Square<GphCtx> off = ok;
    off.bottom = bottom; // codomain no longer matches the right leg's
    const auto d = square_defect(ctx, off);
    REQUIRE(d.has_value());
    CHECK(d->kind == "corner-mismatch");
    CHECK_THROWS_AS(make_square(ctx, off.left, off.right, off.top, off.bottom), Error);
}

TEST_CASE("filler enumeration agrees with a direct filter of the hom set") {
    const GphCtx ctx;
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        const GraphMap f = corpus::random_graph_map(rng, 3, 3);
        for (const auto& j : corpus::gph_generators()) {
            const auto tops = ctx.hom(ctx.dom(j), ctx.dom(f));
            const auto bottoms = ctx.hom(ctx.cod(j), ctx.cod(f));
            for (const auto& a : tops)
                for (const auto& b : bottoms) {
                    if (!ctx.equal(ctx.compose(f, a), ctx.compose(b, j))) continue;
                    const Square<GphCtx> s{j, f, a, b};
                    std::vector<GraphMap> direct;
                    for (const auto& dcand : ctx.hom(ctx.cod(j), ctx.dom(f)))
                        if (ctx.equal(ctx.compose(dcand, j), a) &&
                            ctx.equal(ctx.compose(f, dcand), b))
                            direct.push_back(dcand);
                    const auto found = enumerate_fillers(ctx, s);
                    REQUIRE(found.size() == direct.size());
                    for (std::size_t k = 0; k < found.size(); ++k)
                        CHECK(ctx.equal(found[k], direct[k]));
                    CHECK(enumerate_fillers(ctx, s, 1).size() == (direct.empty() ? 0u : 1u));
                }
        }
    }
}

TEST_CASE("lifting against the free node matches node surjectivity") {
    const GphCtx ctx;
    const std::vector<GraphMap> J = {corpus::gen_gph_node()};
    Rng rng(29);
    int surj = 0;
    for (int t = 0; t < 40; ++t) {
        const GraphMap f = corpus::random_graph_map(rng, 4, 4);
        const bool want = oracle::node_surjective(f);
        CHECK(has_rlp(ctx, f, J).holds == want);
        CHECK(is_j_fibration(ctx, f, J) == want);
        if (want) ++surj;
    }
    CHECK(surj > 0);
    CHECK(surj < 40);
}

TEST_CASE("lifting against the free edge matches fullness on edges") {
    const GphCtx ctx;
    const std::vector<GraphMap> J = {corpus::gen_gph_edge()};
    Rng rng(31);
    int full = 0;
    for (int t = 0; t < 40; ++t) {
        const GraphMap f = corpus::random_graph_map(rng, 3, 4);
        const bool want = oracle::edge_full(f);
        CHECK(has_rlp(ctx, f, J).holds == want);
        if (want) ++full;
    }
    CHECK(full > 0);
    CHECK(full < 40);
}

TEST_CASE("failed lifting reports the first unsolvable square") {
    const GphCtx ctx;
    GraphMap f; // pt -> two discrete nodes, missing y1
    f.dom = single_node("x0");
    f.cod = discrete_graph({"y0", "y1"});
    f.node_map = {{"x0", "y0"}};
    const auto rep = has_rlp(ctx, f, {corpus::gen_gph_node()});
    CHECK(!rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->bottom.node_map.at("pt") == "y1");
    CHECK(rep.squares_checked >= 1);
}

TEST_CASE("trivial fibration characterisation matches full-and-surjective") {
    const auto corpus_cats = corpus::small_category_corpus(2, 2, 3);
    int yes = 0, total = 0;
    for (const auto& c : corpus_cats)
        for (const auto& d : corpus_cats) {
            if (c.morphisms.size() > 4 || d.morphisms.size() > 4) continue;
            for (const auto& f : hom_functors(c, d)) {
                ++total;
                const bool want =
                    oracle::functor_full(f) && oracle::functor_surjective_on_objects(f);
                CHECK(is_trivial_fibration_cat(f).holds == want);
                if (want) ++yes;
            }
        }
    CHECK(total > 50);
    CHECK(yes > 0);
    CHECK(yes < total);
}

TEST_CASE("retract diagrams certify retracts") {
    const GphCtx ctx;
    const auto c2 = corpus::complete_graph(2, "a");
    const auto c1 = corpus::complete_graph(1, "b");
    const auto f = corpus::induced_graph_map(c2, c1, {0, 0});
    RetractDiagram<GphCtx> d{identity_graph_map(c2.g), identity_graph_map(c1.g),
                             identity_graph_map(c2.g), identity_graph_map(c1.g)};
    CHECK(is_retract_of(ctx, f, f, d));

    RetractDiagram<GphCtx> bad = d;
    bad.r0 = corpus::induced_graph_map(c2, c2, {0, 0});
    CHECK(!is_retract_of(ctx, f, f, bad));
}

TEST_CASE("canonical graph family matches a fresh isomorphism count") {
    CHECK(canonical_graphs(2, 2).size() == oracle::multigraph_iso_classes(2, 2));
    CHECK(canonical_graphs(3, 2).size() == oracle::multigraph_iso_classes(3, 2));
    CHECK(canonical_graphs(3, 3).size() == oracle::multigraph_iso_classes(3, 3));
    CHECK(canonical_graphs(4, 4).size() == oracle::multigraph_iso_classes(4, 4));
    for (const auto& g : canonical_graphs(3, 3)) CHECK(validate_graph(g).empty());
}

TEST_CASE("subgraph inclusions enumerate every subgraph") {
    for (const auto& b : canonical_graphs(3, 3)) {
        const auto incs = subgraph_inclusions(b);
        CHECK(incs.size() == oracle::subgraph_inclusion_count(b));
        for (const auto& m : incs) {
            CHECK(validate_graph_map(m).empty());
            CHECK(is_mono(m));
            CHECK(m.cod == b);
        }
    }
}

TEST_CASE("the codiagonal probe reproduces its frozen counts") {
    const auto rep = rlp_probe_gph(codiagonal_map(), 2, 2);
    CHECK(rep.holds);
    CHECK(rep.squares_checked == 13);
    unsigned long long probes = 0;
    for (const auto& b : canonical_graphs(2, 2)) probes += oracle::subgraph_inclusion_count(b);
    CHECK(rep.probes_checked == probes);
}

TEST_CASE("a non-surjective map fails the probe with a witness") {
    GraphMap f;
    f.dom = single_node("x0");
    f.cod = discrete_graph({"y0", "y1"});
    f.node_map = {{"x0", "y0"}};
    const auto rep = rlp_probe_gph(f, 2, 2);
    CHECK(!rep.holds);
    CHECK(rep.witness.has_value());
}
