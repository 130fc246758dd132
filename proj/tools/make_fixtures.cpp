// Regenerates the JSON corpus the CLI tests and the acceptance manifest run
// against. Every file is canonical JSON, so re-running is a no-op on clean
// output.
#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "awfslab/catgph.hpp"
#include "awfslab/instance_io.hpp"
#include "awfslab/jfib.hpp"
#include "awfslab/json_io.hpp"

using namespace awfslab;

namespace {

GraphMap gmap(FiniteGraph dom, FiniteGraph cod, std::map<std::string, std::string> nodes,
              std::map<std::string, std::string> edges = {}) {
    GraphMap m;
    m.dom = std::move(dom);
    m.cod = std::move(cod);
    m.node_map = std::move(nodes);
    m.edge_map = std::move(edges);
    return m;
}

Json square(const GraphMap& left, const GraphMap& right, const GraphMap& top,
            const GraphMap& bottom) {
    Json j;
    j["kind"] = "square";
    j["left"] = to_json(left);
    j["right"] = to_json(right);
    j["top"] = to_json(top);
    j["bottom"] = to_json(bottom);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const Json& j) {
        write_json_file((dir / name).string(), j);
    };

    // ---- plain instances ------------------------------------------------
    const FiniteGraph g_point = single_node("x0");
    const FiniteGraph g_d2 = discrete_graph({"a0", "a1"});
    const FiniteGraph g_yd2 = discrete_graph({"y0", "y1"});
    put("gph_point.json", to_json(g_point));
    put("gph_d2.json", to_json(g_d2));
    put("gph_empty.json", to_json(empty_graph()));

    FiniteGraph bad;
    bad.nodes = {"n0"};
    bad.edges = {{"e0", "n0", "n9"}};
    put("gph_bad.json", to_json(bad));
    put("gph_unknown.json", Json{{"kind", "widget"}});

    const FiniteCategory c_arrow = arrow_category();
    FiniteCategory c_parallel, c_chain2;
    for (const auto& nc : curated_categories()) {
        if (nc.name == "parallel_pair") c_parallel = nc.cat;
        if (nc.name == "chain2") c_chain2 = nc.cat;
    }
    put("cat_arrow.json", to_json(c_arrow));
    put("cat_chain2.json", to_json(c_chain2));
    put("ss_horn21.json", to_json(horn(2, 1)));

    // ---- functors and lifting data on them ------------------------------
    Functor merge;
    merge.dom = c_parallel;
    merge.cod = c_arrow;
    merge.object_map = {{"p0", "a0"}, {"p1", "a1"}};
    merge.morphism_map = {{"id_p0", "id_a0"}, {"id_p1", "id_a1"}, {"pf", "f"}, {"pg", "f"}};
    put("fun_merge.json", to_json(merge));
    put("fun_id_arrow.json", to_json(identity_functor(c_arrow)));

    Functor notfull;
    notfull.dom = discrete_category(2);
    notfull.cod = c_arrow;
    notfull.object_map = {{"d0", "a0"}, {"d1", "a1"}};
    notfull.morphism_map = {{"id_d0", "id_a0"}, {"id_d1", "id_a1"}};
    put("fun_notfull.json", to_json(notfull));

    put("rstruct_merge.json", rmap_to_json(rmap_structure_enumerate(merge, 4).front()));

    // ---- generating sets ------------------------------------------------
    const GraphMap j_node = gmap(empty_graph(), single_node("pt"), {});
    put("gen_gph_node.json", Json::array({to_json(j_node)}));

    Json horns = Json::array();
    for (auto [m, k] :
         std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}})
        horns.push_back(to_json(horn_inclusion(m, k)));
    put("gen_horns2.json", horns);

    Json jc = Json::array();
    for (const auto& f : j_cat()) jc.push_back(to_json(f));
    put("gen_jcat.json", jc);

    // ---- maps probed by rlp / factorize ---------------------------------
    put("map_codiag.json", to_json(codiagonal_map()));
    put("map_pt_to_d2.json", to_json(gmap(g_point, g_yd2, {{"x0", "y0"}})));
    put("map_gph_empty_to_term.json", to_json(unique_map_to_terminal(empty_graph())));
    put("map_ss_horn_term.json", to_json(*unique_map_to_terminal(horn(2, 1), 2)));

    // ---- lifting squares -------------------------------------------------
    {
        const FiniteGraph dx = discrete_graph({"x0", "x1"});
        const FiniteGraph du = discrete_graph({"u0", "u1"});
        const FiniteGraph gp = single_node("p");
        put("sq_gph_fill.json",
            square(gmap(g_point, dx, {{"x0", "x0"}}),
                   gmap(du, gp, {{"u0", "p"}, {"u1", "p"}}),
                   gmap(g_point, du, {{"x0", "u0"}}),
                   gmap(dx, gp, {{"x0", "p"}, {"x1", "p"}})));

        FiniteGraph one_edge;
        one_edge.nodes = {"m0", "m1"};
        one_edge.edges = {{"me", "m0", "m1"}};
        const FiniteGraph dm = discrete_graph({"m0", "m1"});
        const GraphMap incl = gmap(dm, one_edge, {{"m0", "m0"}, {"m1", "m1"}});
        put("sq_gph_nofill.json",
            square(incl, incl, identity_graph_map(dm), identity_graph_map(one_edge)));
    }

    // ---- carriers with chosen extensions --------------------------------
    const GphCtx gph;
    const std::vector<GraphMap> Jg = {j_node};
    auto fib_on = [&](const FiniteGraph& carrier) {
        auto r = make_jfib(gph, carrier, Jg);
        if (!r.fib) {
            std::fprintf(stderr, "fixture carrier unexpectedly has no structure\n");
            std::exit(1);
        }
        return *r.fib;
    };
    put("jfib_x_point.json", jfib_to_json<GphIo>(fib_on(g_point)));
    put("jfib_y_point.json", jfib_to_json<GphIo>(fib_on(single_node("y0"))));
    put("jfib_d2.json", jfib_to_json<GphIo>(fib_on(g_d2)));
    put("jfib_y_d2.json", jfib_to_json<GphIo>(fib_on(g_yd2)));

    JFibObject<GphCtx> missing;
    missing.carrier = g_d2;
    missing.generators = Jg;
    put("jfib_missing.json", jfib_to_json<GphIo>(missing));

    // ---- structure-preserving maps and factorisation legs ---------------
    const FiniteGraph zg = discrete_graph({"x0", "z1"});
    put("map_i_good.json", to_json(gmap(g_point, zg, {{"x0", "x0"}})));
    put("map_q_good.json", to_json(gmap(zg, single_node("y0"), {{"x0", "y0"}, {"z1", "y0"}})));
    put("map_i_collapse.json", to_json(gmap(g_d2, single_node("b0"), {{"a0", "b0"}, {"a1", "b0"}})));
    put("map_q_b0.json", to_json(gmap(single_node("b0"), single_node("y0"), {{"b0", "y0"}})));
    put("map_i_idx0.json", to_json(identity_graph_map(g_point)));
    put("map_q_miss.json", to_json(gmap(g_point, g_yd2, {{"x0", "y0"}})));
    put("map_i_idd2.json", to_json(identity_graph_map(g_d2)));
    put("map_q_swap.json", to_json(gmap(g_d2, g_yd2, {{"a0", "y1"}, {"a1", "y0"}})));
    put("map_f_d2_to_x.json", to_json(gmap(g_d2, g_point, {{"a0", "x0"}, {"a1", "x0"}})));
    put("map_f_swap_y.json", to_json(gmap(g_yd2, g_yd2, {{"y0", "y1"}, {"y1", "y0"}})));

    // ---- the acceptance manifest ----------------------------------------
    Json entries = Json::array();
    auto entry = [&](const std::string& name, std::vector<std::string> args,
                     const std::string& expect) {
        entries.push_back({{"name", name}, {"args", args}, {"expect", expect}});
    };

    entry("validate-graph", {"validate", "--in", "{root}/gph_d2.json"}, "pass");
    entry("validate-category", {"validate", "--in", "{root}/cat_arrow.json"}, "pass");
    entry("validate-ssset", {"validate", "--in", "{root}/ss_horn21.json"}, "pass");
    entry("validate-graph-map", {"validate", "--in", "{root}/map_codiag.json"}, "pass");
    entry("validate-functor", {"validate", "--in", "{root}/fun_merge.json"}, "pass");
    entry("validate-ss-map", {"validate", "--in", "{root}/map_ss_horn_term.json"}, "pass");
    entry("validate-broken-graph", {"validate", "--in", "{root}/gph_bad.json"}, "fail");
    entry("validate-unknown-kind", {"validate", "--in", "{root}/gph_unknown.json"}, "error");

    entry("lift-solvable", {"lift", "--square", "{root}/sq_gph_fill.json"}, "pass");
    entry("lift-unsolvable", {"lift", "--square", "{root}/sq_gph_nofill.json"}, "fail");

    entry("rlp-probe-pass",
          {"rlp", "--map", "{root}/map_codiag.json", "--against", "probe-monos", "--probe-nodes",
           "2", "--probe-edges", "2"},
          "pass");
    entry("rlp-probe-fail",
          {"rlp", "--map", "{root}/map_pt_to_d2.json", "--against", "probe-monos", "--probe-nodes",
           "2", "--probe-edges", "2"},
          "fail");
    entry("rlp-functor-pass",
          {"rlp", "--map", "{root}/fun_merge.json", "--against", "{root}/gen_jcat.json"}, "pass");
    entry("rlp-functor-fail",
          {"rlp", "--map", "{root}/fun_notfull.json", "--against", "{root}/gen_jcat.json"}, "fail");

    entry("factorize-complete",
          {"factorize", "--map", "{root}/map_gph_empty_to_term.json", "--gen",
           "{root}/gen_gph_node.json", "--max-rounds", "3"},
          "pass");
    entry("factorize-budget",
          {"factorize", "--map", "{root}/map_ss_horn_term.json", "--gen",
           "{root}/gen_horns2.json", "--max-rounds", "1"},
          "budget");

    entry("jfib-validate", {"jfib", "validate", "--in", "{root}/jfib_d2.json"}, "pass");
    entry("jfib-validate-missing", {"jfib", "validate", "--in", "{root}/jfib_missing.json"},
          "fail");
    entry("jfib-morphism-preserves",
          {"jfib", "morphism", "--map", "{root}/map_f_d2_to_x.json", "--dom",
           "{root}/jfib_d2.json", "--cod", "{root}/jfib_x_point.json"},
          "pass");
    entry("jfib-morphism-breaks",
          {"jfib", "morphism", "--map", "{root}/map_f_swap_y.json", "--dom",
           "{root}/jfib_y_d2.json", "--cod", "{root}/jfib_y_d2.json"},
          "fail");
    entry("jfib-extend",
          {"jfib", "extend", "--dom", "{root}/jfib_x_point.json", "--cod",
           "{root}/jfib_y_point.json", "--i", "{root}/map_i_good.json", "--q",
           "{root}/map_q_good.json"},
          "pass");
    entry("jfib-extend-not-mono",
          {"jfib", "extend", "--dom", "{root}/jfib_d2.json", "--cod", "{root}/jfib_y_point.json",
           "--i", "{root}/map_i_collapse.json", "--q", "{root}/map_q_b0.json"},
          "fail");
    entry("jfib-extend-not-fibration",
          {"jfib", "extend", "--dom", "{root}/jfib_x_point.json", "--cod", "{root}/jfib_y_d2.json",
           "--i", "{root}/map_i_idx0.json", "--q", "{root}/map_q_miss.json"},
          "fail");
    entry("jfib-extend-bad-composite",
          {"jfib", "extend", "--dom", "{root}/jfib_d2.json", "--cod", "{root}/jfib_y_d2.json",
           "--i", "{root}/map_i_idd2.json", "--q", "{root}/map_q_swap.json"},
          "fail");
    entry("jfib-replace",
          {"jfib", "replace", "--in", "{root}/gph_empty.json", "--gen",
           "{root}/gen_gph_node.json", "--max-rounds", "3"},
          "pass");

    entry("comonad-laws", {"catgph", "comonad-laws", "--cat", "{root}/cat_chain2.json"}, "pass");
    entry("counterexample-small",
          {"catgph", "counterexample", "--probe-nodes", "2", "--probe-edges", "2"}, "pass");
    entry("rmap-iff-section", {"catgph", "rmap-iff-section", "--functor", "{root}/fun_merge.json"},
          "pass");
    entry("free-rmap",
          {"catgph", "free-rmap", "--g", "{root}/fun_id_arrow.json", "--rstruct",
           "{root}/rstruct_merge.json"},
          "pass");
    entry("f-cof-probe", {"catgph", "f-cof-probe", "--probe-nodes", "2", "--probe-edges", "2"},
          "pass");

    put("acceptance_manifest.json", Json{{"entries", entries}});

    std::printf("fixtures written to %s\n", dir.string().c_str());
    return 0;
}
