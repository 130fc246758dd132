#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace awfslab {

// Finite directed multigraph. Nodes and edges are opaque string identifiers;
// all containers are kept sorted so that enumeration order, serialization and
// table keys are deterministic.
struct FiniteGraph {
    struct Edge {
        std::string id;
        std::string src;
        std::string tgt;
        bool operator==(const Edge&) const = default;
    };

    std::vector<std::string> nodes; // sorted, unique
    std::vector<Edge> edges;        // sorted by id, unique

    bool operator==(const FiniteGraph&) const = default;

    bool has_node(const std::string& n) const;
    const Edge* edge(const std::string& id) const;
    void sort();
};

struct GraphMap {
    FiniteGraph dom;
    FiniteGraph cod;
    std::map<std::string, std::string> node_map;
    std::map<std::string, std::string> edge_map;

    bool operator==(const GraphMap&) const = default;
};

// Builders used all over the test corpus.
FiniteGraph empty_graph();
FiniteGraph single_node(const std::string& name);
FiniteGraph discrete_graph(const std::vector<std::string>& names);
FiniteGraph loop_graph(const std::string& node, const std::string& edge);

// Terminal object (one node, one loop) and the unique map into it.
FiniteGraph terminal_graph();
GraphMap unique_map_to_terminal(const FiniteGraph& x);

// Structural validation; findings are data ({"kind": ..., ...}), not failures.
// Returned as rendered one-line strings paired with a JSON blob by json_io.
struct Finding {
    std::string kind;
    std::map<std::string, std::string> detail;
    bool operator==(const Finding&) const = default;
};

std::vector<Finding> validate_graph(const FiniteGraph& g);
std::vector<Finding> validate_graph_map(const GraphMap& m);

GraphMap identity_graph_map(const FiniteGraph& g);
// g after f
GraphMap compose(const GraphMap& g, const GraphMap& f);
bool is_mono(const GraphMap& m);

// Path components: edges are treated as symmetric. Output is a partition,
// components sorted by least node, nodes sorted inside each component.
std::vector<std::vector<std::string>> pi0_graph(const FiniteGraph& g);

// All graph maps dom -> cod in lexicographic order: node images are chosen in
// sorted-node order, then edge images in sorted-edge order, candidates sorted.
std::vector<GraphMap> hom_graph_maps(const FiniteGraph& dom, const FiniteGraph& cod);

// Streaming variant in the same order. The map passed to the callback is a
// borrow of a single reused buffer; return false to stop early (the function
// then also returns false).
bool for_each_graph_hom(const FiniteGraph& dom, const FiniteGraph& cod,
                        const std::function<bool(const GraphMap&)>& fn);

// n-ary disjoint union; callers guarantee name-disjointness (overlap throws).
FiniteGraph disjoint_union_graphs(const std::vector<FiniteGraph>& xs);
// [f_1, ..., f_n] : ⊔dom(f_i) -> shared codomain.
GraphMap copair_graph_maps(const std::vector<GraphMap>& fs);
// ⊔f_i : ⊔dom(f_i) -> ⊔cod(f_i).
GraphMap sum_graph_maps(const std::vector<GraphMap>& fs);
// Identity-assignment inclusion of a subgraph into a supergraph.
GraphMap include_graph_map(const FiniteGraph& sub, const FiniteGraph& whole);

struct GraphPushout {
    FiniteGraph object;
    GraphMap from_right; // B -> P  (right leg of the span's pushout square)
    GraphMap from_base;  // X -> P
};

// Pushout of  X <-a- A -i-> B  computed element-wise; base-side names survive
// whenever a class contains one, attached-side names are kept otherwise (with
// a '#k' suffix on collision).
GraphPushout pushout_graph(const GraphMap& i, const GraphMap& a);

// Mediating map out of a pushout for a cocone (u : B -> Q, v : X -> Q) with
// u∘i = v∘a; nullopt if the cocone does not commute.
std::optional<GraphMap> pushout_induced(const GraphPushout& po, const GraphMap& u,
                                        const GraphMap& v);

// Copy of g with every node/edge id prefixed; used by the cell-attachment
// step to give freshly attached material collision-free names.
FiniteGraph prefix_names(const FiniteGraph& g, const std::string& prefix);
// Same map with its codomain (and codomain-side images) renamed by prefix.
GraphMap prefix_cod(const GraphMap& m, const std::string& prefix);
// Same map with its domain renamed by prefix (keys re-keyed, images kept).
GraphMap prefix_dom(const GraphMap& m, const std::string& prefix);

// Instance-category interface used by the generic lifting/algebra engines.
struct GphCtx {
    using Object = FiniteGraph;
    using Map = GraphMap;

    std::vector<Map> hom(const Object& a, const Object& x) const { return hom_graph_maps(a, x); }
    // Enumeration order unspecified; the callback borrows a reused buffer.
    template <class F>
    bool for_each_hom_unordered(const Object& a, const Object& x, F&& fn) const {
        return for_each_graph_hom(a, x, std::function<bool(const Map&)>(std::forward<F>(fn)));
    }
    Map compose(const Map& g, const Map& f) const { return awfslab::compose(g, f); }
    Map identity(const Object& x) const { return identity_graph_map(x); }
    bool equal(const Map& f, const Map& g) const { return f == g; }
    const Object& dom(const Map& f) const { return f.dom; }
    const Object& cod(const Map& f) const { return f.cod; }
    bool valid(const Map& f) const { return validate_graph_map(f).empty(); }
    bool mono(const Map& f) const { return is_mono(f); }
    std::string canon(const Map& f) const; // assignment-only canonical JSON
    std::string name() const { return "graph"; }

    // For a mono i : X -> Z and k : A -> Z, the unique k0 : A -> X with
    // i∘k0 = k, if the image of k lies inside the image of i.
    std::optional<Map> factor_through_mono(const Map& i, const Map& k) const;

    // Colimit/naming support used by the cell-attachment step.
    using Pushout = GraphPushout;
    Pushout pushout(const Map& i, const Map& a) const { return pushout_graph(i, a); }
    std::optional<Map> induced(const Pushout& po, const Map& u, const Map& v) const {
        return pushout_induced(po, u, v);
    }
    Object prefix_object(const Object& x, const std::string& p) const {
        return prefix_names(x, p);
    }
    Map prefix_codomain(const Map& m, const std::string& p) const { return prefix_cod(m, p); }
    Map prefix_domain(const Map& m, const std::string& p) const { return prefix_dom(m, p); }
    Object coproduct(const std::vector<Object>& xs) const { return disjoint_union_graphs(xs); }
    Map copair(const std::vector<Map>& fs) const { return copair_graph_maps(fs); }
    Map sum(const std::vector<Map>& fs) const { return sum_graph_maps(fs); }
    Map include_into(const Object& sub, const Object& whole) const {
        return include_graph_map(sub, whole);
    }
    // canon(compose(g, f)) without materialising the composite.
    std::string canon_composed(const Map& g, const Map& f) const;
    std::vector<std::string> cells(const Object& x) const {
        std::vector<std::string> out;
        for (const auto& n : x.nodes) out.push_back("node:" + n);
        for (const auto& e : x.edges) out.push_back("edge:" + e.id);
        return out;
    }
    std::map<std::string, std::string> cell_assignment(const Map& f) const {
        std::map<std::string, std::string> out;
        for (const auto& [k, v] : f.node_map) out["node:" + k] = "node:" + v;
        for (const auto& [k, v] : f.edge_map) out["edge:" + k] = "edge:" + v;
        return out;
    }
    Object terminal(const Object&) const { return terminal_graph(); }
    Map to_terminal(const Object& x) const { return unique_map_to_terminal(x); }
};

} // namespace awfslab
