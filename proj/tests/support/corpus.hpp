#pragma once
// Seeded instance generators shared by the unit tests and the acceptance
// suite. "Complete" graphs/complexes (one cell per vertex tuple) are the
// workhorse: they are fibrant, every vertex assignment induces a map, and
// surjective vertex maps induce fibrations, so valid structured instances
// can be produced in bulk.
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "awfslab/catgph.hpp"
#include "awfslab/free_cat.hpp"
#include "awfslab/jfib.hpp"
#include "awfslab/lifting.hpp"
#include "awfslab/rng.hpp"

namespace corpus {

using namespace awfslab;

// A surjection {0..from-1} -> {0..onto-1}: every target is hit at least once,
// remaining slots are uniform.
inline std::vector<int> random_surjection(Rng& rng, int from, int onto) {
    std::vector<int> pos(from);
    for (int k = 0; k < from; ++k) pos[k] = k;
    for (int k = from - 1; k > 0; --k)
        std::swap(pos[k], pos[rng.below(static_cast<std::uint64_t>(k) + 1)]);
    std::vector<int> out(from, 0);
    for (int t = 0; t < onto; ++t) out[pos[t]] = t;
    for (int k = onto; k < from; ++k) out[pos[k]] = static_cast<int>(rng.below(onto));
    return out;
}

// ---- graphs -------------------------------------------------------------

// One node per label and one edge per ordered pair (loops included).
struct CompleteGraph {
    FiniteGraph g;
    std::string stem;
    std::vector<int> labels;
    std::string node(int i) const { return stem + "n" + std::to_string(i); }
    std::string edge(int i, int j) const {
        return stem + "e" + std::to_string(i) + "_" + std::to_string(j);
    }
};

inline CompleteGraph complete_graph(int n, const std::string& stem) {
    CompleteGraph c;
    c.stem = stem;
    for (int i = 0; i < n; ++i) {
        c.labels.push_back(i);
        c.g.nodes.push_back(c.node(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.g.edges.push_back({c.edge(i, j), c.node(i), c.node(j)});
    c.g.sort();
    return c;
}

// The map induced by a label assignment; total because the codomain is
// complete.
inline GraphMap induced_graph_map(const CompleteGraph& dom, const CompleteGraph& cod,
                                  const std::vector<int>& sigma) {
    GraphMap m;
    m.dom = dom.g;
    m.cod = cod.g;
    for (int i : dom.labels) m.node_map[dom.node(i)] = cod.node(sigma[i]);
    for (int i : dom.labels)
        for (int j : dom.labels) m.edge_map[dom.edge(i, j)] = cod.edge(sigma[i], sigma[j]);
    return m;
}

inline FiniteGraph random_plain_graph(Rng& rng, int max_nodes, int max_edges) {
    const int n = 1 + static_cast<int>(rng.below(max_nodes));
    FiniteGraph g;
    for (int i = 0; i < n; ++i) g.nodes.push_back("z" + std::to_string(i));
    const int ne = static_cast<int>(rng.below(max_edges + 1));
    for (int k = 0; k < ne; ++k)
        g.edges.push_back({"ze" + std::to_string(k), rng.pick(g.nodes), rng.pick(g.nodes)});
    g.sort();
    return g;
}

// A random map between random graphs; dom edges with no compatible target
// are dropped so the result is always valid.
inline GraphMap random_graph_map(Rng& rng, int max_nodes, int max_edges) {
    FiniteGraph dom = random_plain_graph(rng, max_nodes, max_edges);
    const FiniteGraph cod = random_plain_graph(rng, max_nodes, max_edges);
    GraphMap m;
    for (const auto& nd : dom.nodes) m.node_map[nd] = rng.pick(cod.nodes);
    std::vector<FiniteGraph::Edge> kept;
    for (const auto& e : dom.edges) {
        std::vector<std::string> cands;
        for (const auto& ce : cod.edges)
            if (ce.src == m.node_map[e.src] && ce.tgt == m.node_map[e.tgt])
                cands.push_back(ce.id);
        if (cands.empty()) continue;
        kept.push_back(e);
        m.edge_map[e.id] = rng.pick(cands);
    }
    dom.edges = std::move(kept);
    dom.sort();
    m.dom = std::move(dom);
    m.cod = cod;
    return m;
}

// The two graph-side generating maps: a free node, and a free edge on a
// fixed pair of nodes.
inline GraphMap gen_gph_node() {
    GraphMap j;
    j.dom = empty_graph();
    j.cod = single_node("pt");
    return j;
}

inline GraphMap gen_gph_edge() {
    GraphMap j;
    j.dom = discrete_graph({"a0", "a1"});
    j.cod = j.dom;
    j.cod.edges.push_back({"ae", "a0", "a1"});
    j.cod.sort();
    j.node_map = {{"a0", "a0"}, {"a1", "a1"}};
    return j;
}

inline std::vector<GraphMap> gph_generators() { return {gen_gph_node(), gen_gph_edge()}; }

// ---- semi-simplicial sets -----------------------------------------------

// One cell per vertex tuple up to dimension 2 (so every horn extends), plus
// optional duplicated 2-cells to make extension choices non-unique.
struct CompleteComplex {
    SemiSimplicialSet x;
    std::string stem;
    std::vector<int> labels;
    std::map<std::string, int> vert_label;
    std::map<std::string, std::array<int, 2>> edge_label;
    std::map<std::string, std::array<int, 3>> tri_label; // duplicates included
    std::string vertex(int i) const { return stem + "v" + std::to_string(i); }
    std::string edge(int i, int j) const {
        return stem + "e" + std::to_string(i) + "_" + std::to_string(j);
    }
    std::string tri(int i, int j, int k) const {
        return stem + "t" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
    }
};

inline CompleteComplex complete_complex(int n, const std::string& stem, int dup2 = 0,
                                        Rng* rng = nullptr) {
    CompleteComplex c;
    c.stem = stem;
    c.x.dim = 2;
    c.x.cells.resize(3);
    c.x.faces.resize(3);
    for (int i = 0; i < n; ++i) {
        c.labels.push_back(i);
        c.x.cells[0].push_back(c.vertex(i));
        c.vert_label[c.vertex(i)] = i;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string id = c.edge(i, j);
            c.x.cells[1].push_back(id);
            c.x.faces[1][id] = {c.vertex(j), c.vertex(i)};
            c.edge_label[id] = {i, j};
        }
    auto add_tri = [&](int i, int j, int k, const std::string& id) {
        c.x.cells[2].push_back(id);
        c.x.faces[2][id] = {c.edge(j, k), c.edge(i, k), c.edge(i, j)};
        c.tri_label[id] = {i, j, k};
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) add_tri(i, j, k, c.tri(i, j, k));
    for (int d = 0; d < dup2 && rng; ++d) {
        const int i = static_cast<int>(rng->below(n));
        const int j = static_cast<int>(rng->below(n));
        const int k = static_cast<int>(rng->below(n));
        add_tri(i, j, k, c.tri(i, j, k) + "~d" + std::to_string(d));
    }
    c.x.sort();
    return c;
}

// The full subcomplex on a label subset (face-closed by construction).
inline CompleteComplex subcomplex(const CompleteComplex& z, const std::vector<int>& keep) {
    std::set<int> in(keep.begin(), keep.end());
    CompleteComplex c;
    c.stem = z.stem;
    c.labels.assign(in.begin(), in.end());
    c.x.dim = 2;
    c.x.cells.resize(3);
    c.x.faces.resize(3);
    for (const auto& [id, l] : z.vert_label)
        if (in.count(l)) {
            c.x.cells[0].push_back(id);
            c.vert_label[id] = l;
        }
    for (const auto& [id, l] : z.edge_label)
        if (in.count(l[0]) && in.count(l[1])) {
            c.x.cells[1].push_back(id);
            c.x.faces[1][id] = z.x.faces[1].at(id);
            c.edge_label[id] = l;
        }
    for (const auto& [id, l] : z.tri_label)
        if (in.count(l[0]) && in.count(l[1]) && in.count(l[2])) {
            c.x.cells[2].push_back(id);
            c.x.faces[2][id] = z.x.faces[2].at(id);
            c.tri_label[id] = l;
        }
    c.x.sort();
    return c;
}

// The vertex-induced map; duplicated cells land on the base cell of their
// image tuple.
inline SSMap induced_ss_map(const CompleteComplex& dom, const CompleteComplex& cod,
                            const std::vector<int>& sigma) {
    SSMap m;
    m.dom = dom.x;
    m.cod = cod.x;
    m.level_map.resize(3);
    for (const auto& [id, l] : dom.vert_label) m.level_map[0][id] = cod.vertex(sigma[l]);
    for (const auto& [id, l] : dom.edge_label)
        m.level_map[1][id] = cod.edge(sigma[l[0]], sigma[l[1]]);
    for (const auto& [id, l] : dom.tri_label)
        m.level_map[2][id] = cod.tri(sigma[l[0]], sigma[l[1]], sigma[l[2]]);
    return m;
}

inline std::vector<SSMap> ss_horn_generators() {
    std::vector<SSMap> J;
    for (auto [m, k] :
         std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}})
        J.push_back(horn_inclusion(m, k));
    return J;
}

// The loop-and-base chooser: extend a vertex by its loop edge, a horn of
// dimension two by the base cell on the attached vertices. Both choices are
// preserved by every vertex-induced map, so structured maps come for free.
inline JFibObject<SSCtx> canonical_jfib(const SSCtx& ctx, const CompleteComplex& c,
                                        const std::vector<SSMap>& J) {
    JFibObject<SSCtx> x;
    x.carrier = c.x;
    x.generators = J;
    for (int j = 0; j < static_cast<int>(J.size()); ++j) {
        const auto& simplex = ctx.cod(J[j]);
        for (const auto& a : ctx.hom(ctx.dom(J[j]), c.x)) {
            SSMap ext;
            ext.dom = simplex;
            ext.cod = c.x;
            ext.level_map.resize(simplex.dim + 1);
            if (simplex.dim == 1) {
                const int u = c.vert_label.at(a.level_map[0].begin()->second);
                ext.level_map[0]["0"] = c.vertex(u);
                ext.level_map[0]["1"] = c.vertex(u);
                ext.level_map[1]["01"] = c.edge(u, u);
            } else {
                const int v0 = c.vert_label.at(a.level_map[0].at("0"));
                const int v1 = c.vert_label.at(a.level_map[0].at("1"));
                const int v2 = c.vert_label.at(a.level_map[0].at("2"));
                ext.level_map[0]["0"] = c.vertex(v0);
                ext.level_map[0]["1"] = c.vertex(v1);
                ext.level_map[0]["2"] = c.vertex(v2);
                ext.level_map[1]["01"] = c.edge(v0, v1);
                ext.level_map[1]["02"] = c.edge(v0, v2);
                ext.level_map[1]["12"] = c.edge(v1, v2);
                ext.level_map[2]["012"] = c.tri(v0, v1, v2);
            }
            x.chooser[chooser_key(ctx, j, a)] = {a, ext};
        }
    }
    return x;
}

// ---- boundary-style generating set for the factorisation tests ----------

// Standard simplex and its boundary, padded to dimension 2 so all objects in
// one run agree on dim. Attaching along a boundary adds no lower cells, so
// these generators always terminate within a few rounds.
inline SemiSimplicialSet padded_simplex(int m) {
    SemiSimplicialSet s;
    s.dim = 2;
    s.cells.resize(3);
    s.faces.resize(3);
    for (int d = 0; d <= m; ++d) s.cells[0].push_back(std::to_string(d));
    if (m >= 1) {
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const std::string id = std::to_string(i) + std::to_string(j);
                s.cells[1].push_back(id);
                s.faces[1][id] = {std::to_string(j), std::to_string(i)};
            }
    }
    if (m >= 2) {
        s.cells[2].push_back("012");
        s.faces[2]["012"] = {"12", "02", "01"};
    }
    s.sort();
    return s;
}

inline SemiSimplicialSet padded_boundary(int m) {
    SemiSimplicialSet s = padded_simplex(m);
    if (m == 0)
        s.cells[0].clear();
    else
        s.cells[m].clear();
    if (m >= 1) s.faces[m].clear();
    return s;
}

inline std::vector<SSMap> ss_boundary_generators() {
    std::vector<SSMap> J;
    for (int m = 0; m <= 2; ++m) J.push_back(include_ss_map(padded_boundary(m), padded_simplex(m)));
    return J;
}

// A random face-closed carrier inside a complete complex, mapped to a smaller
// complete complex by a vertex surjection.
inline SSMap random_ss_map(Rng& rng, int max_labels) {
    const int nz = 2 + static_cast<int>(rng.below(max_labels - 1));
    const CompleteComplex big = complete_complex(nz, "x");
    SemiSimplicialSet dom;
    dom.dim = 2;
    dom.cells.resize(3);
    dom.faces.resize(3);
    std::set<std::string> keep1, keep0;
    for (const auto& t : big.x.cells[2])
        if (rng.chance(1, 4)) {
            dom.cells[2].push_back(t);
            dom.faces[2][t] = big.x.faces[2].at(t);
            for (const auto& e : big.x.faces[2].at(t)) keep1.insert(e);
        }
    for (const auto& e : big.x.cells[1])
        if (keep1.count(e) || rng.chance(1, 3)) {
            dom.cells[1].push_back(e);
            dom.faces[1][e] = big.x.faces[1].at(e);
            for (const auto& v : big.x.faces[1].at(e)) keep0.insert(v);
        }
    for (const auto& v : big.x.cells[0])
        if (keep0.count(v) || rng.chance(1, 2)) dom.cells[0].push_back(v);
    if (dom.cells[0].empty()) dom.cells[0].push_back(big.x.cells[0].front());
    dom.sort();

    const int ny = 1 + static_cast<int>(rng.below(nz));
    const CompleteComplex y = complete_complex(ny, "y");
    const auto sigma = random_surjection(rng, nz, ny);
    SSMap m;
    m.dom = dom;
    m.cod = y.x;
    m.level_map.resize(3);
    for (const auto& v : dom.cells[0]) m.level_map[0][v] = y.vertex(sigma[big.vert_label.at(v)]);
    for (const auto& e : dom.cells[1]) {
        const auto l = big.edge_label.at(e);
        m.level_map[1][e] = y.edge(sigma[l[0]], sigma[l[1]]);
    }
    for (const auto& t : dom.cells[2]) {
        const auto l = big.tri_label.at(t);
        m.level_map[2][t] = y.tri(sigma[l[0]], sigma[l[1]], sigma[l[2]]);
    }
    return m;
}

// ---- structured-extension instances -------------------------------------

struct GphExtendInstance {
    JFibObject<GphCtx> x, y;
    GraphMap i, q;
};

// Valid by construction: i is a subgraph inclusion, q a node-surjective map
// onto a complete graph (hence a fibration for the free-node generator), and
// y's chosen node is the image of x's.
inline GphExtendInstance random_gph_extend(Rng& rng) {
    const GphCtx ctx;
    FiniteGraph z = random_plain_graph(rng, 5, 6);
    const int nz = static_cast<int>(z.nodes.size());

    FiniteGraph xg;
    for (const auto& nd : z.nodes)
        if (rng.chance(1, 2)) xg.nodes.push_back(nd);
    if (xg.nodes.empty()) xg.nodes.push_back(rng.pick(z.nodes));
    std::set<std::string> xin(xg.nodes.begin(), xg.nodes.end());
    for (const auto& e : z.edges)
        if (xin.count(e.src) && xin.count(e.tgt) && rng.chance(2, 3)) xg.edges.push_back(e);
    xg.sort();
    const GraphMap i = include_graph_map(xg, z);

    const int ny = 1 + static_cast<int>(rng.below(std::min(nz, 3)));
    const CompleteGraph y = complete_graph(ny, "y");
    const auto sigma = random_surjection(rng, nz, ny);
    GraphMap q;
    q.dom = z;
    q.cod = y.g;
    std::map<std::string, int> zl;
    for (int k = 0; k < nz; ++k) zl[z.nodes[k]] = sigma[k];
    for (const auto& nd : z.nodes) q.node_map[nd] = y.node(zl[nd]);
    for (const auto& e : z.edges) q.edge_map[e.id] = y.edge(zl[e.src], zl[e.tgt]);

    GphExtendInstance inst;
    inst.i = i;
    inst.q = q;
    const std::vector<GraphMap> J = {gen_gph_node()};
    inst.x.carrier = xg;
    inst.x.generators = J;
    GraphMap attach;
    attach.dom = empty_graph();
    attach.cod = xg;
    GraphMap ext;
    ext.dom = single_node("pt");
    ext.cod = xg;
    ext.node_map = {{"pt", rng.pick(xg.nodes)}};
    inst.x.chooser[chooser_key(ctx, 0, attach)] = {attach, ext};
    inst.y.carrier = y.g;
    inst.y.generators = J;
    GraphMap attach_y;
    attach_y.dom = empty_graph();
    attach_y.cod = y.g;
    GraphMap ext_y;
    ext_y.dom = single_node("pt");
    ext_y.cod = y.g;
    ext_y.node_map = {{"pt", q.node_map.at(ext.node_map.at("pt"))}};
    inst.y.chooser[chooser_key(ctx, 0, attach_y)] = {attach_y, ext_y};
    return inst;
}

struct SSExtendInstance {
    JFibObject<SSCtx> x, y;
    SSMap i, q;
};

inline SSExtendInstance random_ss_extend(Rng& rng) {
    const SSCtx ctx;
    const int nz = 1 + static_cast<int>(rng.below(3));
    const CompleteComplex z =
        complete_complex(nz, "z", static_cast<int>(rng.below(3)), &rng);
    std::vector<int> keep;
    for (int l = 0; l < nz; ++l)
        if (rng.chance(1, 2)) keep.push_back(l);
    if (keep.empty()) keep.push_back(static_cast<int>(rng.below(nz)));
    const CompleteComplex xc = subcomplex(z, keep);
    const int ny = 1 + static_cast<int>(rng.below(nz));
    const CompleteComplex y = complete_complex(ny, "y");
    const auto sigma = random_surjection(rng, nz, ny);

    SSExtendInstance inst;
    inst.i = include_ss_map(xc.x, z.x);
    inst.q = induced_ss_map(z, y, sigma);
    const auto J = ss_horn_generators();
    inst.x = canonical_jfib(ctx, xc, J);
    inst.y = canonical_jfib(ctx, y, J);
    return inst;
}

// Mutations: each flavour violates exactly one hypothesis of the extension
// step. Returns the instance and the finding kind it must be rejected with.
inline std::pair<GphExtendInstance, std::string> gph_extend_mutation(Rng& rng, int flavour) {
    const GphCtx ctx;
    const std::vector<GraphMap> J = {gen_gph_node()};
    if (flavour == 0) { // i collapses two nodes
        GphExtendInstance inst;
        FiniteGraph xg = discrete_graph({"u0", "u1"});
        FiniteGraph z = single_node("u0");
        const int extra = static_cast<int>(rng.below(3));
        for (int k = 0; k < extra; ++k) z.nodes.push_back("w" + std::to_string(k));
        z.sort();
        inst.i.dom = xg;
        inst.i.cod = z;
        inst.i.node_map = {{"u0", "u0"}, {"u1", "u0"}};
        const int nz = static_cast<int>(z.nodes.size());
        const int ny = 1 + static_cast<int>(rng.below(std::min(nz, 2)));
        const CompleteGraph y = complete_graph(ny, "y");
        const auto sigma = random_surjection(rng, nz, ny);
        inst.q.dom = z;
        inst.q.cod = y.g;
        for (int k = 0; k < nz; ++k) inst.q.node_map[z.nodes[k]] = y.node(sigma[k]);
        inst.x.carrier = xg;
        inst.x.generators = J;
        GraphMap attach;
        attach.dom = empty_graph();
        attach.cod = xg;
        GraphMap ext;
        ext.dom = single_node("pt");
        ext.cod = xg;
        ext.node_map = {{"pt", rng.pick(xg.nodes)}};
        inst.x.chooser[chooser_key(ctx, 0, attach)] = {attach, ext};
        inst.y.carrier = y.g;
        inst.y.generators = J;
        GraphMap attach_y;
        attach_y.dom = empty_graph();
        attach_y.cod = y.g;
        GraphMap ext_y;
        ext_y.dom = single_node("pt");
        ext_y.cod = y.g;
        ext_y.node_map = {{"pt", inst.q.node_map.at("u0")}};
        inst.y.chooser[chooser_key(ctx, 0, attach_y)] = {attach_y, ext_y};
        return {inst, "not-a-monomorphism"};
    }
    if (flavour == 1) { // q misses a node of its codomain
        GphExtendInstance inst = random_gph_extend(rng);
        const CompleteGraph y2 = complete_graph(2, "y");
        GraphMap q;
        q.dom = inst.q.dom;
        q.cod = y2.g;
        for (const auto& nd : q.dom.nodes) q.node_map[nd] = y2.node(0);
        for (const auto& e : q.dom.edges) q.edge_map[e.id] = y2.edge(0, 0);
        inst.q = q;
        inst.y.carrier = y2.g;
        inst.y.chooser.clear();
        GraphMap attach_y;
        attach_y.dom = empty_graph();
        attach_y.cod = y2.g;
        GraphMap ext_y;
        ext_y.dom = single_node("pt");
        ext_y.cod = y2.g;
        ext_y.node_map = {{"pt", y2.node(0)}};
        inst.y.chooser[chooser_key(GphCtx{}, 0, attach_y)] = {attach_y, ext_y};
        return {inst, "not-a-j-fibration"};
    }
    // flavour 2: y's chosen node disagrees with the image of x's
    while (true) {
        GphExtendInstance inst = random_gph_extend(rng);
        if (inst.y.carrier.nodes.size() < 2) continue;
        auto& entry = inst.y.chooser.begin()->second;
        const std::string image = entry.ext.node_map.at("pt");
        for (const auto& nd : inst.y.carrier.nodes)
            if (nd != image) {
                entry.ext.node_map["pt"] = nd;
                break;
            }
        return {inst, "composite-not-a-morphism"};
    }
}

inline std::pair<SSExtendInstance, std::string> ss_extend_mutation(Rng& rng, int flavour) {
    const SSCtx ctx;
    const auto J = ss_horn_generators();
    if (flavour == 0) { // i collapses two vertices
        const CompleteComplex xc = complete_complex(2, "u");
        const int nz = 1 + static_cast<int>(rng.below(2));
        const CompleteComplex z = complete_complex(nz, "z");
        const std::vector<int> collapse = {0, 0};
        SSExtendInstance inst;
        inst.i = induced_ss_map(xc, z, collapse);
        const int ny = 1 + static_cast<int>(rng.below(nz));
        const CompleteComplex y = complete_complex(ny, "y");
        inst.q = induced_ss_map(z, y, random_surjection(rng, nz, ny));
        inst.x = canonical_jfib(ctx, xc, J);
        inst.y = canonical_jfib(ctx, y, J);
        return {inst, "not-a-monomorphism"};
    }
    if (flavour == 1) { // q misses a vertex
        const int nz = 1 + static_cast<int>(rng.below(2));
        const CompleteComplex z = complete_complex(nz, "z", static_cast<int>(rng.below(2)), &rng);
        std::vector<int> keep;
        for (int l = 0; l < nz; ++l)
            if (rng.chance(1, 2)) keep.push_back(l);
        if (keep.empty()) keep.push_back(0);
        const CompleteComplex xc = subcomplex(z, keep);
        const CompleteComplex y = complete_complex(2, "y");
        SSExtendInstance inst;
        inst.i = include_ss_map(xc.x, z.x);
        inst.q = induced_ss_map(z, y, std::vector<int>(nz, 0));
        inst.x = canonical_jfib(ctx, xc, J);
        inst.y = canonical_jfib(ctx, y, J);
        return {inst, "not-a-j-fibration"};
    }
    // flavour 2: y's chosen extension for the first problem over x's image is
    // rerouted away from the loop, so the composite stops preserving choices.
    const int nz = 2;
    const CompleteComplex z = complete_complex(nz, "z");
    std::vector<int> keep = {static_cast<int>(rng.below(nz))};
    const CompleteComplex xc = subcomplex(z, keep);
    const CompleteComplex y = complete_complex(2, "y");
    SSExtendInstance inst;
    inst.i = include_ss_map(xc.x, z.x);
    std::vector<int> sigma = {0, 1};
    if (rng.chance(1, 2)) std::swap(sigma[0], sigma[1]);
    inst.q = induced_ss_map(z, y, sigma);
    inst.x = canonical_jfib(ctx, xc, J);
    inst.y = canonical_jfib(ctx, y, J);
    const auto& first = inst.x.chooser.begin()->second;
    const auto qi = ctx.compose(inst.q, inst.i);
    const auto key = chooser_key(ctx, 0, ctx.compose(qi, first.a));
    auto& target = inst.y.chooser.at(key);
    const int u = y.vert_label.at(target.ext.level_map[0].at("0"));
    const int w = 1 - u;
    target.ext.level_map[0]["1"] = y.vertex(w);
    target.ext.level_map[1]["01"] = y.edge(u, w);
    return {inst, "composite-not-a-morphism"};
}

// ---- composable chains for the double-category laws ---------------------

// Chains of induced surjections between complete graphs; such maps lift
// against both graph generators, so every link carries a total table.
inline std::vector<GraphMap> random_gph_chain(Rng& rng, int len) {
    std::vector<int> sizes(len + 1);
    sizes[0] = 1 + static_cast<int>(rng.below(4));
    for (int k = 1; k <= len; ++k) sizes[k] = 1 + static_cast<int>(rng.below(sizes[k - 1]));
    std::vector<CompleteGraph> gs;
    for (int k = 0; k <= len; ++k)
        gs.push_back(complete_graph(sizes[k], "c" + std::to_string(k)));
    std::vector<GraphMap> chain;
    for (int k = 0; k < len; ++k)
        chain.push_back(
            induced_graph_map(gs[k], gs[k + 1], random_surjection(rng, sizes[k], sizes[k + 1])));
    return chain;
}

inline std::vector<SSMap> random_ss_chain(Rng& rng, int len) {
    std::vector<int> sizes(len + 1);
    sizes[0] = 1 + static_cast<int>(rng.below(2));
    for (int k = 1; k <= len; ++k) sizes[k] = 1 + static_cast<int>(rng.below(sizes[k - 1]));
    std::vector<CompleteComplex> cs;
    for (int k = 0; k <= len; ++k)
        cs.push_back(complete_complex(sizes[k], "c" + std::to_string(k)));
    std::vector<SSMap> chain;
    for (int k = 0; k < len; ++k)
        chain.push_back(
            induced_ss_map(cs[k], cs[k + 1], random_surjection(rng, sizes[k], sizes[k + 1])));
    return chain;
}

// ---- category corpus ----------------------------------------------------

// Free categories on the canonical acyclic graphs, kept when the morphism
// count stays within the bound, plus the curated composition tables.
inline std::vector<FiniteCategory> small_category_corpus(int max_nodes, int max_edges,
                                                         int max_nonid) {
    std::vector<FiniteCategory> out;
    for (const auto& g : canonical_graphs(max_nodes, max_edges)) {
        if (graph_has_directed_cycle(g)) continue;
        FiniteCategory c = finite_free_category(g);
        if (static_cast<int>(c.morphisms.size() - c.objects.size()) <= max_nonid)
            out.push_back(std::move(c));
    }
    for (const auto& nc : curated_categories())
        if (static_cast<int>(nc.cat.objects.size()) <= max_nodes &&
            static_cast<int>(nc.cat.morphisms.size() - nc.cat.objects.size()) <= max_nonid)
            out.push_back(nc.cat);
    return out;
}

} // namespace corpus
