#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "awfslab/category.hpp"
#include "awfslab/catgph.hpp"
#include "awfslab/error.hpp"
#include "awfslab/free_cat.hpp"
#include "awfslab/graph.hpp"
#include "awfslab/json_io.hpp"
#include "awfslab/rng.hpp"
#include "awfslab/ssset.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace awfslab;

namespace {
FiniteCategory curated(const std::string& name) {
    for (const auto& nc : curated_categories())
        if (nc.name == name) return nc.cat;
    FAIL("unknown curated category ", name);
    return {};
}
} // namespace

TEST_CASE("graph validation catches structural defects") {
    FiniteGraph g;
    g.nodes = {"n0"};
    g.edges = {{"e0", "n0", "n9"}};
    const auto f = validate_graph(g);
    REQUIRE(f.size() == 1);
    CHECK(f[0].kind == "dangling-endpoint");

    FiniteGraph dup;
    dup.nodes = {"n0", "n0"};
    CHECK(!validate_graph(dup).empty());

    CHECK(validate_graph(terminal_graph()).empty());
    CHECK(validate_graph(empty_graph()).empty());
}

TEST_CASE("graph hom enumeration matches the naive count") {
    Rng rng(42);
    for (int t = 0; t < 25; ++t) {
        const FiniteGraph dom = corpus::random_plain_graph(rng, 3, 3);
        const FiniteGraph cod = corpus::random_plain_graph(rng, 3, 4);
        const auto hom = hom_graph_maps(dom, cod);
        CHECK(hom.size() == oracle::graph_hom_count(dom, cod));
        for (const auto& m : hom) CHECK(validate_graph_map(m).empty());
    }
    CHECK(hom_graph_maps(empty_graph(), empty_graph()).size() == 1);
    CHECK(hom_graph_maps(single_node("a"), empty_graph()).empty());
}

TEST_CASE("streaming graph hom enumeration visits the same maps in order") {
    Rng rng(7);
    const GphCtx ctx;
    const FiniteGraph dom = corpus::random_plain_graph(rng, 3, 2);
    const FiniteGraph cod = corpus::random_plain_graph(rng, 3, 3);
    const auto collected = hom_graph_maps(dom, cod);
    std::vector<std::string> seen;
    const bool finished = for_each_graph_hom(dom, cod, [&](const GraphMap& m) {
        seen.push_back(ctx.canon(m));
        return true;
    });
    CHECK(finished);
    REQUIRE(seen.size() == collected.size());
    for (std::size_t k = 0; k < seen.size(); ++k) CHECK(seen[k] == ctx.canon(collected[k]));

    if (!collected.empty()) {
        std::size_t calls = 0;
        const bool stopped = for_each_graph_hom(dom, cod, [&](const GraphMap&) {
            ++calls;
            return false;
        });
        CHECK(!stopped);
        CHECK(calls == 1);
    }
}

TEST_CASE("path components match a naive search") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const FiniteGraph g = corpus::random_plain_graph(rng, 5, 5);
        const auto parts = pi0_graph(g);
        CHECK(parts.size() == oracle::component_count(g));
        std::set<std::string> all;
        for (const auto& p : parts) all.insert(p.begin(), p.end());
        CHECK(all.size() == g.nodes.size());
    }
}

TEST_CASE("graph pushout satisfies its universal property") {
    const FiniteGraph pt = single_node("a0");
    FiniteGraph edge;
    edge.nodes = {"a0", "a1"};
    edge.edges = {{"ae", "a0", "a1"}};
    const GraphMap i = include_graph_map(pt, edge);
    const FiniteGraph x = discrete_graph({"x0", "x1"});
    GraphMap a;
    a.dom = pt;
    a.cod = x;
    a.node_map = {{"a0", "x1"}};

    const GraphPushout po = pushout_graph(i, a);
    CHECK(validate_graph(po.object).empty());
    CHECK(compose(po.from_base, a) == compose(po.from_right, i));

    const GraphMap u = unique_map_to_terminal(edge);
    const GraphMap v = unique_map_to_terminal(x);
    const auto ind = pushout_induced(po, u, v);
    REQUIRE(ind.has_value());
    CHECK(compose(*ind, po.from_right) == u);
    CHECK(compose(*ind, po.from_base) == v);

    FiniteGraph q;
    q.nodes = {"q0", "q1"};
    q.edges = {{"l0", "q0", "q0"}, {"l1", "q1", "q1"}};
    GraphMap u2; // sends the glued corner to q0 ...
    u2.dom = edge;
    u2.cod = q;
    u2.node_map = {{"a0", "q0"}, {"a1", "q0"}};
    u2.edge_map = {{"ae", "l0"}};
    GraphMap v2; // ... while the base side sends it to q1
    v2.dom = x;
    v2.cod = q;
    v2.node_map = {{"x0", "q0"}, {"x1", "q1"}};
    CHECK(!pushout_induced(po, u2, v2).has_value());
}

TEST_CASE("coproducts, copairs and inclusions fit together") {
    const FiniteGraph g1 = discrete_graph({"p0", "p1"});
    const FiniteGraph g2 = loop_graph("q0", "qe");
    const FiniteGraph u = disjoint_union_graphs({g1, g2});
    CHECK(u.nodes.size() == 3);
    CHECK(u.edges.size() == 1);

    const GraphMap in1 = include_graph_map(g1, u);
    const GraphMap in2 = include_graph_map(g2, u);
    const FiniteGraph t = terminal_graph();
    const GraphMap f1 = unique_map_to_terminal(g1);
    const GraphMap f2 = unique_map_to_terminal(g2);
    const GraphMap cp = copair_graph_maps({f1, f2});
    CHECK(compose(cp, in1) == f1);
    CHECK(compose(cp, in2) == f2);

    const GraphMap sm = sum_graph_maps({identity_graph_map(g1), identity_graph_map(g2)});
    CHECK(sm.dom == u);
    CHECK(sm.cod == u);
    CHECK(validate_graph_map(sm).empty());

    CHECK_THROWS_AS(disjoint_union_graphs({g1, g1}), Error);
    try {
        disjoint_union_graphs({g1, g1});
    } catch (const Error& e) {
        CHECK(e.code() == "coproduct-overlap");
    }
}

TEST_CASE("composite canonical form avoids materialising the composite") {
    Rng rng(11);
    const GphCtx gph;
    for (int t = 0; t < 10; ++t) {
        const auto c0 = corpus::complete_graph(1 + rng.below(3), "a");
        const auto c1 = corpus::complete_graph(1 + rng.below(3), "b");
        const auto c2 = corpus::complete_graph(1, "c");
        const auto f = corpus::induced_graph_map(
            c0, c1, corpus::random_surjection(rng, c0.labels.size(), c1.labels.size()));
        const auto g = corpus::induced_graph_map(
            c1, c2, corpus::random_surjection(rng, c1.labels.size(), 1));
        CHECK(gph.canon_composed(g, f) == gph.canon(gph.compose(g, f)));
    }
    const SSCtx ss;
    for (int t = 0; t < 6; ++t) {
        const auto c0 = corpus::complete_complex(1 + rng.below(2), "a");
        const auto c1 = corpus::complete_complex(1 + rng.below(2), "b");
        const auto sz = std::min(c0.labels.size(), c1.labels.size());
        const auto f = corpus::induced_ss_map(
            c0, c1, corpus::random_surjection(rng, c0.labels.size(), sz));
        const auto g = corpus::induced_ss_map(c1, corpus::complete_complex(1, "c"),
                                              std::vector<int>(c1.labels.size(), 0));
        CHECK(ss.canon_composed(g, f) == ss.canon(ss.compose(g, f)));
    }
}

TEST_CASE("category tables validate and compose") {
    for (const auto& nc : curated_categories()) {
        INFO(nc.name);
        CHECK(validate_category(nc.cat).empty());
    }
    Rng rng(5);
    for (int t = 0; t < 20; ++t) CHECK(validate_category(random_category(rng)).empty());

    const FiniteCategory arrow = arrow_category();
    for (const auto& f : hom_functors(arrow, curated("chain2"))) {
        CHECK(validate_functor(f).empty());
        const auto idd = identity_functor(arrow);
        CHECK(compose(f, idd) == f);
    }
}

TEST_CASE("functor enumeration matches a fresh search") {
    const FiniteCategory arrow = arrow_category();
    const FiniteCategory par = curated("parallel_pair");
    const FiniteCategory ch2 = curated("chain2");
    const FiniteCategory d2 = discrete_category(2);

    const std::vector<std::pair<FiniteCategory, FiniteCategory>> pairs = {
        {arrow, arrow}, {par, arrow}, {d2, ch2}, {ch2, arrow}, {arrow, par}};
    for (const auto& [dom, cod] : pairs) {
        const auto fs = hom_functors(dom, cod);
        CHECK(fs.size() == oracle::functor_count_naive(dom, cod));
        std::set<std::string> seen;
        for (const auto& f : fs) {
            CHECK(validate_functor(f).empty());
            seen.insert(to_json(f).dump());
        }
        CHECK(seen.size() == fs.size());
    }
}

TEST_CASE("category components agree with the underlying graph") {
    for (const auto& nc : curated_categories())
        CHECK(pi0_cat(nc.cat).size() == oracle::component_count(underlying_graph(nc.cat)));
}

TEST_CASE("simplices and horns have the predicted cells") {
    for (int m = 0; m <= 3; ++m) {
        const SemiSimplicialSet s = standard_simplex(m);
        CHECK(validate_ssset(s).empty());
        for (int d = 0; d <= m; ++d)
            CHECK(s.cells[d].size() == oracle::simplex_cell_count(m, d));
    }
    for (int m = 1; m <= 3; ++m)
        for (int k = 0; k <= m; ++k) {
            const SemiSimplicialSet h = horn(m, k);
            CHECK(validate_ssset(h).empty());
            std::size_t total = 0, stotal = 0;
            for (const auto& lvl : h.cells) total += lvl.size();
            for (const auto& lvl : standard_simplex(m).cells) stotal += lvl.size();
            CHECK(total == stotal - 2);
            const SSMap inc = horn_inclusion(m, k);
            CHECK(validate_ss_map(inc).empty());
            CHECK(is_mono(inc));
        }
}

TEST_CASE("simplicial hom enumeration matches the binomial count") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const auto hom = hom_ss_maps(standard_simplex(a), standard_simplex(b));
            CHECK(hom.size() == oracle::simplex_hom_count(a, b));
            for (const auto& m : hom) CHECK(validate_ss_map(m).empty());
        }
}

TEST_CASE("unordered simplicial hom enumeration finds the same maps") {
    const SSCtx ctx;
    const auto check_same = [&](const SemiSimplicialSet& dom, const SemiSimplicialSet& cod) {
        auto ordered = hom_ss_maps(dom, cod);
        std::vector<std::string> want;
        for (const auto& m : ordered) want.push_back(ctx.canon(m));
        std::sort(want.begin(), want.end());
        std::vector<std::string> got;
        const bool fin = for_each_ss_hom_unordered(dom, cod, [&](const SSMap& m) {
            got.push_back(ctx.canon(m));
            return true;
        });
        CHECK(fin);
        std::sort(got.begin(), got.end());
        CHECK(got == want);
    };
    check_same(horn(2, 1), corpus::complete_complex(2, "z").x);
    check_same(standard_simplex(1), corpus::complete_complex(2, "z", 2, nullptr).x);
    check_same(standard_simplex(2), standard_simplex(3));
    check_same(horn(1, 0), standard_simplex(2));

    std::size_t calls = 0;
    const bool stopped =
        for_each_ss_hom_unordered(standard_simplex(1), standard_simplex(2), [&](const SSMap&) {
            ++calls;
            return false;
        });
    CHECK(!stopped);
    CHECK(calls == 1);
}

TEST_CASE("simplicial pushouts satisfy the universal property") {
    const SSMap inc = horn_inclusion(2, 1);
    const corpus::CompleteComplex z = corpus::complete_complex(2, "z");
    const auto homs = hom_ss_maps(inc.dom, z.x);
    REQUIRE(!homs.empty());
    const SSMap a = homs.front();
    const SSPushout po = pushout_ssset(inc, a);
    CHECK(validate_ssset(po.object).empty());
    CHECK(compose(po.from_base, a) == compose(po.from_right, inc));

    const auto u = unique_map_to_terminal(inc.cod, 2);
    const auto v = unique_map_to_terminal(z.x, 2);
    REQUIRE(u);
    REQUIRE(v);
    const auto ind = pushout_induced(po, *u, *v);
    REQUIRE(ind.has_value());
    CHECK(compose(*ind, po.from_right) == *u);
    CHECK(compose(*ind, po.from_base) == *v);
}

TEST_CASE("complete complexes and induced maps are structurally sound") {
    Rng rng(23);
    for (int n = 1; n <= 3; ++n) {
        const auto c = corpus::complete_complex(n, "c", 2, &rng);
        CHECK(validate_ssset(c.x).empty());
        const auto y = corpus::complete_complex(1 + rng.below(n), "y");
        const auto m = corpus::induced_ss_map(
            c, y, corpus::random_surjection(rng, n, y.labels.size()));
        CHECK(validate_ss_map(m).empty());
        std::vector<int> keep;
        for (int l = 0; l < n; ++l)
            if (l % 2 == 0) keep.push_back(l);
        const auto sub = corpus::subcomplex(c, keep);
        CHECK(validate_ssset(sub.x).empty());
        CHECK(validate_ss_map(include_ss_map(sub.x, c.x)).empty());
    }
    for (int m = 0; m <= 2; ++m) {
        CHECK(validate_ssset(corpus::padded_simplex(m)).empty());
        CHECK(validate_ssset(corpus::padded_boundary(m)).empty());
    }
    for (const auto& j : corpus::ss_boundary_generators()) {
        CHECK(validate_ss_map(j).empty());
        CHECK(is_mono(j));
    }
}

TEST_CASE("free categories count paths like the adjacency matrix") {
    int tried = 0;
    for (const auto& g : canonical_graphs(3, 3)) {
        if (graph_has_directed_cycle(g)) continue;
        if (++tried > 40) break;
        const FiniteCategory c = finite_free_category(g);
        CHECK(validate_category(c).empty());
        for (const auto& a : c.objects)
            for (const auto& b : c.objects)
                CHECK(c.hom(a, b).size() ==
                      oracle::path_count_upto(g, a, b, static_cast<int>(g.nodes.size())));
    }
    CHECK(tried > 10);
}

TEST_CASE("unbounded hom sets are refused") {
    const FiniteGraph loop = loop_graph("n0", "e0");
    CHECK(graph_has_directed_cycle(loop));
    try {
        finite_free_category(loop);
        FAIL("expected an error for a cyclic base");
    } catch (const Error& e) {
        CHECK(e.code() == "unbounded-homset");
    }
}

TEST_CASE("serialization round trips every instance shape") {
    Rng rng(9);
    for (int t = 0; t < 8; ++t) {
        const FiniteGraph g = corpus::random_plain_graph(rng, 4, 5);
        CHECK(graph_from_json(to_json(g)) == g);
        const GraphMap m = corpus::random_graph_map(rng, 3, 3);
        CHECK(graph_map_from_json(to_json(m)) == m);
        const FiniteCategory c = random_category(rng);
        CHECK(category_from_json(to_json(c)) == c);
    }
    const auto z = corpus::complete_complex(2, "z", 1, &rng);
    CHECK(ssset_from_json(to_json(z.x)) == z.x);
    const auto sm = corpus::induced_ss_map(z, corpus::complete_complex(1, "y"),
                                           std::vector<int>(2, 0));
    CHECK(ss_map_from_json(to_json(sm)) == sm);
    const FiniteCategory arrow = arrow_category();
    for (const auto& f : hom_functors(arrow, arrow)) CHECK(functor_from_json(to_json(f)) == f);

    const Instance inst = z.x;
    const Json j = to_json(inst);
    CHECK(instance_kind(instance_from_json(j)) == "ssset");
}

TEST_CASE("canonical text is byte-stable and newline-terminated") {
    const Json j = to_json(corpus::complete_graph(2, "g").g);
    const std::string once = canonical_text(j);
    CHECK(once == canonical_text(j));
    REQUIRE(!once.empty());
    CHECK(once.back() == '\n');
    CHECK(canonical_text(parse_text(once)) == once);
}
