#include "awfslab/lifting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace awfslab {

TrivialFibrationReport is_trivial_fibration_cat(const Functor& F) {
    TrivialFibrationReport rep;
    std::set<std::string> image;
    for (const auto& [_, img] : F.object_map) image.insert(img);
    for (const auto& o : F.cod.objects)
        if (!image.count(o)) {
            rep.holds = false;
            rep.findings.push_back({"object-not-hit", {{"object", o}}});
        }
    for (const auto& a : F.dom.objects)
        for (const auto& b : F.dom.objects) {
            const auto& fa = F.object_map.at(a);
            const auto& fb = F.object_map.at(b);
            for (const auto& g : F.cod.hom(fa, fb)) {
                bool hit = false;
                for (const auto& m : F.dom.hom(a, b))
                    if (F.morphism_map.at(m) == g) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    rep.holds = false;
                    rep.findings.push_back(
                        {"not-full", {{"from", a}, {"to", b}, {"morphism", g}}});
                }
            }
        }
    return rep;
}

namespace {

// A multigraph on n nodes as a sorted list of (src,tgt) index pairs.
using PairList = std::vector<std::pair<int, int>>;

PairList apply_perm(const PairList& ps, const std::vector<int>& perm) {
    PairList out;
    out.reserve(ps.size());
    for (const auto& [s, t] : ps) out.emplace_back(perm[s], perm[t]);
    std::sort(out.begin(), out.end());
    return out;
}

PairList canonical_form(const PairList& ps, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PairList best = apply_perm(ps, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        PairList cand = apply_perm(ps, perm);
        if (cand < best) best = cand;
    }
    return best;
}

FiniteGraph graph_of(int n, const PairList& ps) {
    FiniteGraph g;
    for (int i = 0; i < n; ++i) g.nodes.push_back("n" + std::to_string(i));
    int k = 0;
    for (const auto& [s, t] : ps)
        g.edges.push_back({"e" + std::to_string(k++), "n" + std::to_string(s),
                           "n" + std::to_string(t)});
    g.sort();
    return g;
}

} // namespace

std::vector<FiniteGraph> canonical_graphs(int max_nodes, int max_edges) {
    std::vector<FiniteGraph> out;
    for (int n = 0; n <= max_nodes; ++n) {
        const int npairs = n * n;
        std::set<PairList> seen;
        // multisets of <= max_edges pairs, as non-decreasing index sequences
        std::vector<int> pick;
        auto emit = [&]() {
            PairList ps;
            for (int p : pick) ps.emplace_back(p / n, p % n);
            PairList canon = canonical_form(ps, n);
            if (seen.insert(canon).second) out.push_back(graph_of(n, canon));
        };
        emit(); // no edges
        std::function<void(int)> rec = [&](int lo) {
            if (static_cast<int>(pick.size()) == max_edges) return;
            for (int p = lo; p < npairs; ++p) {
                pick.push_back(p);
                emit();
                rec(p);
                pick.pop_back();
            }
        };
        if (n > 0) rec(0);
    }
    return out;
}

std::vector<GraphMap> subgraph_inclusions(const FiniteGraph& b) {
    std::vector<GraphMap> out;
    const int nn = static_cast<int>(b.nodes.size());
    for (unsigned long nmask = 0; nmask < (1ul << nn); ++nmask) {
        std::set<std::string> keep;
        for (int i = 0; i < nn; ++i)
            if (nmask & (1ul << i)) keep.insert(b.nodes[i]);
        std::vector<const FiniteGraph::Edge*> avail;
        for (const auto& e : b.edges)
            if (keep.count(e.src) && keep.count(e.tgt)) avail.push_back(&e);
        const int ne = static_cast<int>(avail.size());
        for (unsigned long emask = 0; emask < (1ul << ne); ++emask) {
            GraphMap inc;
            inc.cod = b;
            inc.dom.nodes.assign(keep.begin(), keep.end());
            for (int i = 0; i < ne; ++i)
                if (emask & (1ul << i)) inc.dom.edges.push_back(*avail[i]);
            inc.dom.sort();
            for (const auto& n : inc.dom.nodes) inc.node_map[n] = n;
            for (const auto& e : inc.dom.edges) inc.edge_map[e.id] = e.id;
            out.push_back(std::move(inc));
        }
    }
    return out;
}

ProbeReport rlp_probe_gph(const GraphMap& f, int max_nodes, int max_edges) {
    GphCtx ctx;
    ProbeReport rep;
    rep.max_nodes = max_nodes;
    rep.max_edges = max_edges;
    for (const auto& b : canonical_graphs(max_nodes, max_edges)) {
        const auto bottoms = hom_graph_maps(b, f.cod);
        for (const auto& i : subgraph_inclusions(b)) {
            ++rep.probes_checked;
            if (bottoms.empty()) continue;
            for (const auto& a : hom_graph_maps(i.dom, f.dom)) {
                const auto fa = compose(f, a);
                for (const auto& bot : bottoms) {
                    if (!(fa == compose(bot, i))) continue;
                    ++rep.squares_checked;
                    Square<GphCtx> s{i, f, a, bot};
                    if (enumerate_fillers(ctx, s, 1).empty()) {
                        rep.holds = false;
                        rep.witness = std::move(s);
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace awfslab
