#include "awfslab/graph.hpp"

#include <algorithm>
#include <set>

#include "awfslab/error.hpp"
#include "awfslab/quotient.hpp"
#include "awfslab/union_find.hpp"
#include "json.hpp"

namespace awfslab {

bool FiniteGraph::has_node(const std::string& n) const {
    return std::binary_search(nodes.begin(), nodes.end(), n);
}

const FiniteGraph::Edge* FiniteGraph::edge(const std::string& id) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it != edges.end() && it->id == id) return &*it;
    return nullptr;
}

void FiniteGraph::sort() {
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
}

FiniteGraph empty_graph() { return {}; }

FiniteGraph single_node(const std::string& name) {
    FiniteGraph g;
    g.nodes = {name};
    return g;
}

FiniteGraph discrete_graph(const std::vector<std::string>& names) {
    FiniteGraph g;
    g.nodes = names;
    g.sort();
    return g;
}

FiniteGraph loop_graph(const std::string& node, const std::string& edge) {
    FiniteGraph g;
    g.nodes = {node};
    g.edges = {{edge, node, node}};
    return g;
}

FiniteGraph terminal_graph() { return loop_graph("pt", "lp"); }

GraphMap unique_map_to_terminal(const FiniteGraph& x) {
    GraphMap m;
    m.dom = x;
    m.cod = terminal_graph();
    for (const auto& n : x.nodes) m.node_map[n] = "pt";
    for (const auto& e : x.edges) m.edge_map[e.id] = "lp";
    return m;
}

std::vector<Finding> validate_graph(const FiniteGraph& g) {
    std::vector<Finding> out;
    std::set<std::string> seen_nodes(g.nodes.begin(), g.nodes.end());
    if (seen_nodes.size() != g.nodes.size())
        out.push_back({"duplicate-node", {}});
    std::set<std::string> seen_edges;
    for (const auto& e : g.edges) {
        if (!seen_edges.insert(e.id).second) out.push_back({"duplicate-edge", {{"edge", e.id}}});
        if (!seen_nodes.count(e.src))
            out.push_back({"dangling-endpoint", {{"edge", e.id}, {"node", e.src}}});
        if (!seen_nodes.count(e.tgt))
            out.push_back({"dangling-endpoint", {{"edge", e.id}, {"node", e.tgt}}});
    }
    return out;
}

std::vector<Finding> validate_graph_map(const GraphMap& m) {
    std::vector<Finding> out;
    for (const auto& n : m.dom.nodes) {
        auto it = m.node_map.find(n);
        if (it == m.node_map.end())
            out.push_back({"node-unmapped", {{"node", n}}});
        else if (!m.cod.has_node(it->second))
            out.push_back({"node-image-missing", {{"node", n}, {"image", it->second}}});
    }
    for (const auto& [n, img] : m.node_map)
        if (!m.dom.has_node(n)) out.push_back({"node-extraneous", {{"node", n}}});
    for (const auto& e : m.dom.edges) {
        auto it = m.edge_map.find(e.id);
        if (it == m.edge_map.end()) {
            out.push_back({"edge-unmapped", {{"edge", e.id}}});
            continue;
        }
        const auto* img = m.cod.edge(it->second);
        if (!img) {
            out.push_back({"edge-image-missing", {{"edge", e.id}, {"image", it->second}}});
            continue;
        }
        auto src_it = m.node_map.find(e.src);
        auto tgt_it = m.node_map.find(e.tgt);
        if (src_it != m.node_map.end() && img->src != src_it->second)
            out.push_back({"source-mismatch", {{"edge", e.id}}});
        if (tgt_it != m.node_map.end() && img->tgt != tgt_it->second)
            out.push_back({"target-mismatch", {{"edge", e.id}}});
    }
    for (const auto& [e, img] : m.edge_map)
        if (!m.dom.edge(e)) out.push_back({"edge-extraneous", {{"edge", e}}});
    return out;
}

GraphMap identity_graph_map(const FiniteGraph& g) {
    GraphMap m;
    m.dom = g;
    m.cod = g;
    for (const auto& n : g.nodes) m.node_map[n] = n;
    for (const auto& e : g.edges) m.edge_map[e.id] = e.id;
    return m;
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
    if (!(f.cod == g.dom)) throw Error("compose-mismatch", "graph map composition: cod(f) != dom(g)");
    GraphMap m;
    m.dom = f.dom;
    m.cod = g.cod;
    for (const auto& [n, img] : f.node_map) m.node_map[n] = g.node_map.at(img);
    for (const auto& [e, img] : f.edge_map) m.edge_map[e] = g.edge_map.at(img);
    return m;
}

bool is_mono(const GraphMap& m) {
    std::set<std::string> nimg, eimg;
    for (const auto& [_, v] : m.node_map)
        if (!nimg.insert(v).second) return false;
    for (const auto& [_, v] : m.edge_map)
        if (!eimg.insert(v).second) return false;
    return true;
}

std::vector<std::vector<std::string>> pi0_graph(const FiniteGraph& g) {
    UnionFind uf(g.nodes.size());
    auto index = [&](const std::string& n) {
        return static_cast<std::size_t>(
            std::lower_bound(g.nodes.begin(), g.nodes.end(), n) - g.nodes.begin());
    };
    for (const auto& e : g.edges) uf.unite(index(e.src), index(e.tgt));
    std::map<std::size_t, std::vector<std::string>> comps;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) comps[uf.find(i)].push_back(g.nodes[i]);
    std::vector<std::vector<std::string>> out;
    for (auto& [_, c] : comps) out.push_back(std::move(c)); // roots are least indices: sorted
    return out;
}

bool for_each_graph_hom(const FiniteGraph& dom, const FiniteGraph& cod,
                        const std::function<bool(const GraphMap&)>& fn) {
    const std::size_t nn = dom.nodes.size();
    std::vector<std::size_t> node_choice(nn, 0);
    GraphMap buf;
    buf.dom = dom;
    buf.cod = cod;

    // true = keep going, false = the callback asked to stop
    auto emit_edge_maps = [&]() -> bool {
        // candidate edges per dom edge, constrained by chosen endpoints
        std::vector<std::vector<const FiniteGraph::Edge*>> cands(dom.edges.size());
        for (std::size_t i = 0; i < dom.edges.size(); ++i) {
            const auto& e = dom.edges[i];
            const auto& s = buf.node_map.at(e.src);
            const auto& t = buf.node_map.at(e.tgt);
            for (const auto& ce : cod.edges)
                if (ce.src == s && ce.tgt == t) cands[i].push_back(&ce);
            if (cands[i].empty()) return true; // no map with this node assignment
        }
        std::vector<std::size_t> pick(dom.edges.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < dom.edges.size(); ++i)
                buf.edge_map[dom.edges[i].id] = cands[i][pick[i]]->id;
            if (!fn(buf)) return false;
            std::size_t i = dom.edges.size();
            while (i > 0) {
                --i;
                if (++pick[i] < cands[i].size()) break;
                pick[i] = 0;
                if (i == 0) return true;
            }
            if (dom.edges.empty()) return true;
        }
    };

    if (nn > 0 && cod.nodes.empty()) return true;
    while (true) {
        for (std::size_t i = 0; i < nn; ++i) buf.node_map[dom.nodes[i]] = cod.nodes[node_choice[i]];
        if (!emit_edge_maps()) return false;
        std::size_t i = nn;
        while (i > 0) {
            --i;
            if (++node_choice[i] < cod.nodes.size()) break;
            node_choice[i] = 0;
            if (i == 0) return true;
        }
        if (nn == 0) return true;
    }
}

std::vector<GraphMap> hom_graph_maps(const FiniteGraph& dom, const FiniteGraph& cod) {
    std::vector<GraphMap> out;
    for_each_graph_hom(dom, cod, [&](const GraphMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

FiniteGraph disjoint_union_graphs(const std::vector<FiniteGraph>& xs) {
    std::set<std::string> nodes;
    std::map<std::string, FiniteGraph::Edge> edges;
    for (const auto& x : xs) {
        for (const auto& n : x.nodes)
            if (!nodes.insert(n).second)
                throw Error("coproduct-overlap", "duplicate node name in disjoint union: " + n);
        for (const auto& e : x.edges)
            if (!edges.emplace(e.id, e).second)
                throw Error("coproduct-overlap", "duplicate edge id in disjoint union: " + e.id);
    }
    FiniteGraph out;
    out.nodes.assign(nodes.begin(), nodes.end());
    for (auto& [_, e] : edges) out.edges.push_back(std::move(e));
    return out;
}

GraphMap copair_graph_maps(const std::vector<GraphMap>& fs) {
    if (fs.empty()) throw Error("coproduct-empty", "copairing needs at least one map");
    GraphMap out;
    std::vector<FiniteGraph> doms;
    doms.reserve(fs.size());
    for (const auto& f : fs) {
        if (!(f.cod == fs.front().cod))
            throw Error("copair-mismatch", "copairing needs a shared codomain");
        doms.push_back(f.dom);
        out.node_map.insert(f.node_map.begin(), f.node_map.end());
        out.edge_map.insert(f.edge_map.begin(), f.edge_map.end());
    }
    out.dom = disjoint_union_graphs(doms);
    out.cod = fs.front().cod;
    return out;
}

GraphMap sum_graph_maps(const std::vector<GraphMap>& fs) {
    if (fs.empty()) throw Error("coproduct-empty", "a sum of maps needs at least one map");
    GraphMap out;
    std::vector<FiniteGraph> doms, cods;
    doms.reserve(fs.size());
    cods.reserve(fs.size());
    for (const auto& f : fs) {
        doms.push_back(f.dom);
        cods.push_back(f.cod);
        out.node_map.insert(f.node_map.begin(), f.node_map.end());
        out.edge_map.insert(f.edge_map.begin(), f.edge_map.end());
    }
    out.dom = disjoint_union_graphs(doms);
    out.cod = disjoint_union_graphs(cods);
    return out;
}

GraphMap include_graph_map(const FiniteGraph& sub, const FiniteGraph& whole) {
    GraphMap m;
    m.dom = sub;
    m.cod = whole;
    for (const auto& n : sub.nodes) {
        if (!whole.has_node(n)) throw Error("inclusion-mismatch", "node not present: " + n);
        m.node_map[n] = n;
    }
    for (const auto& e : sub.edges) {
        const auto* w = whole.edge(e.id);
        if (!w || w->src != e.src || w->tgt != e.tgt)
            throw Error("inclusion-mismatch", "edge not present: " + e.id);
        m.edge_map[e.id] = e.id;
    }
    return m;
}

GraphPushout pushout_graph(const GraphMap& i, const GraphMap& a) {
    if (!(i.dom == a.dom)) throw Error("pushout-span", "pushout legs must share their domain");
    const FiniteGraph& A = i.dom;
    const FiniteGraph& B = i.cod;
    const FiniteGraph& X = a.cod;

    auto make_items = [](const std::vector<std::string>& xs, const std::vector<std::string>& bs) {
        std::vector<std::pair<bool, std::string>> items;
        for (const auto& x : xs) items.emplace_back(false, x);
        for (const auto& b : bs) items.emplace_back(true, b);
        return items;
    };

    std::vector<std::string> b_edge_ids, x_edge_ids;
    for (const auto& e : B.edges) b_edge_ids.push_back(e.id);
    for (const auto& e : X.edges) x_edge_ids.push_back(e.id);

    PushoutQuotient qn(make_items(X.nodes, B.nodes));
    for (const auto& n : A.nodes)
        qn.uf.unite(qn.index(true, i.node_map.at(n)), qn.index(false, a.node_map.at(n)));
    PushoutQuotient qe(make_items(x_edge_ids, b_edge_ids));
    for (const auto& e : A.edges)
        qe.uf.unite(qe.index(true, i.edge_map.at(e.id)), qe.index(false, a.edge_map.at(e.id)));

    std::set<std::string> base_node_names(X.nodes.begin(), X.nodes.end());
    std::set<std::string> base_edge_names(x_edge_ids.begin(), x_edge_ids.end());
    std::map<std::size_t, std::string> node_memo, edge_memo;

    GraphPushout po;
    po.from_base.dom = X;
    po.from_right.dom = B;
    std::set<std::string> pnodes;
    for (const auto& n : X.nodes) {
        auto r = qn.repr(false, n, base_node_names, node_memo);
        po.from_base.node_map[n] = r;
        pnodes.insert(r);
    }
    for (const auto& n : B.nodes) {
        auto r = qn.repr(true, n, base_node_names, node_memo);
        po.from_right.node_map[n] = r;
        pnodes.insert(r);
    }
    po.object.nodes.assign(pnodes.begin(), pnodes.end());

    std::map<std::string, FiniteGraph::Edge> pedges;
    for (const auto& e : X.edges) {
        auto r = qe.repr(false, e.id, base_edge_names, edge_memo);
        po.from_base.edge_map[e.id] = r;
        pedges[r] = {r, po.from_base.node_map.at(e.src), po.from_base.node_map.at(e.tgt)};
    }
    for (const auto& e : B.edges) {
        auto r = qe.repr(true, e.id, base_edge_names, edge_memo);
        po.from_right.edge_map[e.id] = r;
        pedges[r] = {r, po.from_right.node_map.at(e.src), po.from_right.node_map.at(e.tgt)};
    }
    for (auto& [_, e] : pedges) po.object.edges.push_back(e);
    po.object.sort();
    po.from_base.cod = po.object;
    po.from_right.cod = po.object;
    return po;
}

std::optional<GraphMap> pushout_induced(const GraphPushout& po, const GraphMap& u,
                                        const GraphMap& v) {
    if (!(u.cod == v.cod)) return std::nullopt;
    GraphMap m;
    m.dom = po.object;
    m.cod = u.cod;
    for (const auto& [b, p] : po.from_right.node_map) {
        auto it = m.node_map.find(p);
        const auto& val = u.node_map.at(b);
        if (it == m.node_map.end())
            m.node_map[p] = val;
        else if (it->second != val)
            return std::nullopt;
    }
    for (const auto& [x, p] : po.from_base.node_map) {
        auto it = m.node_map.find(p);
        const auto& val = v.node_map.at(x);
        if (it == m.node_map.end())
            m.node_map[p] = val;
        else if (it->second != val)
            return std::nullopt;
    }
    for (const auto& [b, p] : po.from_right.edge_map) {
        auto it = m.edge_map.find(p);
        const auto& val = u.edge_map.at(b);
        if (it == m.edge_map.end())
            m.edge_map[p] = val;
        else if (it->second != val)
            return std::nullopt;
    }
    for (const auto& [x, p] : po.from_base.edge_map) {
        auto it = m.edge_map.find(p);
        const auto& val = v.edge_map.at(x);
        if (it == m.edge_map.end())
            m.edge_map[p] = val;
        else if (it->second != val)
            return std::nullopt;
    }
    if (!validate_graph_map(m).empty()) return std::nullopt;
    return m;
}

FiniteGraph prefix_names(const FiniteGraph& g, const std::string& prefix) {
    FiniteGraph out;
    for (const auto& n : g.nodes) out.nodes.push_back(prefix + n);
    for (const auto& e : g.edges) out.edges.push_back({prefix + e.id, prefix + e.src, prefix + e.tgt});
    out.sort();
    return out;
}

GraphMap prefix_cod(const GraphMap& m, const std::string& prefix) {
    GraphMap out;
    out.dom = m.dom;
    out.cod = prefix_names(m.cod, prefix);
    for (const auto& [n, img] : m.node_map) out.node_map[n] = prefix + img;
    for (const auto& [e, img] : m.edge_map) out.edge_map[e] = prefix + img;
    return out;
}

GraphMap prefix_dom(const GraphMap& m, const std::string& prefix) {
    GraphMap out;
    out.dom = prefix_names(m.dom, prefix);
    out.cod = m.cod;
    for (const auto& [n, img] : m.node_map) out.node_map[prefix + n] = img;
    for (const auto& [e, img] : m.edge_map) out.edge_map[prefix + e] = img;
    return out;
}

std::optional<GraphMap> GphCtx::factor_through_mono(const Map& i, const Map& k) const {
    if (!(i.cod == k.cod)) return std::nullopt;
    std::map<std::string, std::string> ninv, einv;
    for (const auto& [n, img] : i.node_map)
        if (!ninv.emplace(img, n).second) return std::nullopt; // not injective
    for (const auto& [e, img] : i.edge_map)
        if (!einv.emplace(img, e).second) return std::nullopt;
    GraphMap k0;
    k0.dom = k.dom;
    k0.cod = i.dom;
    for (const auto& [n, img] : k.node_map) {
        auto it = ninv.find(img);
        if (it == ninv.end()) return std::nullopt;
        k0.node_map[n] = it->second;
    }
    for (const auto& [e, img] : k.edge_map) {
        auto it = einv.find(img);
        if (it == einv.end()) return std::nullopt;
        k0.edge_map[e] = it->second;
    }
    return k0;
}

std::string GphCtx::canon(const Map& f) const {
    nlohmann::json j;
    j["node_map"] = f.node_map;
    j["edge_map"] = f.edge_map;
    return j.dump();
}

std::string GphCtx::canon_composed(const Map& g, const Map& f) const {
    std::map<std::string, std::string> nm, em;
    for (const auto& [n, img] : f.node_map) nm[n] = g.node_map.at(img);
    for (const auto& [e, img] : f.edge_map) em[e] = g.edge_map.at(img);
    nlohmann::json j;
    j["node_map"] = nm;
    j["edge_map"] = em;
    return j.dump();
}

} // namespace awfslab
