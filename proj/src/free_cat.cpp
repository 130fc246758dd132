#include "awfslab/free_cat.hpp"

#include <algorithm>
#include <functional>

#include "awfslab/error.hpp"

namespace awfslab {

Term atom_term(std::string id) {
    Term t;
    t.atom = std::move(id);
    return t;
}

Term path_term(Path p) {
    Term t;
    t.path = std::move(p);
    return t;
}

bool is_atom(const Term& t) { return !t.path.has_value(); }

bool operator==(const Term& a, const Term& b) {
    if (is_atom(a) != is_atom(b)) return false;
    if (is_atom(a)) return a.atom == b.atom;
    return *a.path == *b.path;
}

bool operator==(const Path& a, const Path& b) {
    if (a.src != b.src || a.tgt != b.tgt || a.labels.size() != b.labels.size()) return false;
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (!(a.labels[i] == b.labels[i])) return false;
    return true;
}

int term_depth(const Term& t) { return is_atom(t) ? 0 : path_depth(*t.path); }

int path_depth(const Path& p) {
    int d = 0;
    for (const auto& l : p.labels) d = std::max(d, term_depth(l));
    return d + 1;
}

std::string to_string(const Term& t) { return is_atom(t) ? t.atom : to_string(*t.path); }

std::string to_string(const Path& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        if (i) s += ",";
        s += to_string(p.labels[i]);
    }
    return s + "]";
}

Path empty_path(const std::string& at) { return {at, at, {}}; }

Path singleton_path(const std::string& src, const std::string& tgt, Term label) {
    Path p{src, tgt, {}};
    p.labels.push_back(std::move(label));
    return p;
}

Path concat(const Path& p, const Path& q) {
    if (p.tgt != q.src) throw Error("path-mismatch", "path concatenation: endpoints do not line up");
    Path r{p.src, q.tgt, p.labels};
    r.labels.insert(r.labels.end(), q.labels.begin(), q.labels.end());
    return r;
}

FreeCategory free_category(const FiniteGraph& g) { return {g}; }

bool graph_has_directed_cycle(const FiniteGraph& g) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : g.edges) adj[e.src].push_back(e.tgt);
    std::map<std::string, int> state; // 0 unseen, 1 active, 2 done
    std::function<bool(const std::string&)> dfs = [&](const std::string& n) -> bool {
        state[n] = 1;
        for (const auto& m : adj[n]) {
            if (state[m] == 1) return true;
            if (state[m] == 0 && dfs(m)) return true;
        }
        state[n] = 2;
        return false;
    };
    for (const auto& n : g.nodes)
        if (state[n] == 0 && dfs(n)) return true;
    return false;
}

std::vector<Path> enumerate_paths(const FreeCategory& fc, const std::string& src,
                                  const std::string& tgt, std::optional<std::size_t> max_len) {
    if (!fc.base.has_node(src) || !fc.base.has_node(tgt))
        throw Error("unknown-node", "path enumeration endpoints must be base nodes");
    if (!max_len && graph_has_directed_cycle(fc.base))
        throw Error("unbounded-homset",
                    "hom-set enumeration over a cyclic base graph requires a length bound");
    // On an acyclic base no path revisits a node, so node count bounds length.
    const std::size_t bound =
        max_len ? *max_len : (fc.base.nodes.empty() ? 0 : fc.base.nodes.size() - 1);
    std::vector<Path> out;
    // breadth over lengths; edge candidates in sorted id order gives shortlex
    std::vector<Path> frontier;
    if (src == tgt) out.push_back(empty_path(src));
    frontier.push_back(empty_path(src));
    for (std::size_t len = 1; len <= bound; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (const auto& e : fc.base.edges) {
                if (e.src != p.tgt) continue;
                Path q = p;
                q.tgt = e.tgt;
                q.labels.push_back(atom_term(e.id));
                if (e.tgt == tgt) out.push_back(q);
                next.push_back(std::move(q));
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

std::string truncation_edge_id(const Path& p) {
    if (p.labels.empty()) return "[]@" + p.src;
    return to_string(p);
}

FiniteGraph free_truncation_graph(const FreeCategory& fc, std::size_t max_len) {
    FiniteGraph g;
    g.nodes = fc.base.nodes;
    for (const auto& a : fc.base.nodes)
        for (const auto& b : fc.base.nodes)
            for (const auto& p : enumerate_paths(fc, a, b, max_len))
                g.edges.push_back({truncation_edge_id(p), a, b});
    g.sort();
    return g;
}

GraphMap unit_eta(const FiniteGraph& g) {
    GraphMap m;
    m.dom = g;
    m.cod = free_truncation_graph(free_category(g), 1);
    for (const auto& n : g.nodes) m.node_map[n] = n;
    for (const auto& e : g.edges)
        m.edge_map[e.id] = truncation_edge_id(singleton_path(e.src, e.tgt, atom_term(e.id)));
    return m;
}

FiniteCategory finite_free_category(const FiniteGraph& g) {
    if (graph_has_directed_cycle(g))
        throw Error("unbounded-homset", "free category on a cyclic graph is infinite");
    FreeCategory fc{g};
    FiniteCategory c;
    c.objects = g.nodes;
    std::vector<Path> all;
    for (const auto& a : g.nodes)
        for (const auto& b : g.nodes)
            for (const auto& p : enumerate_paths(fc, a, b, std::nullopt)) all.push_back(p);
    for (const auto& p : all) {
        c.morphisms.push_back({truncation_edge_id(p), p.src, p.tgt});
        if (p.labels.empty()) c.identities[p.src] = truncation_edge_id(p);
    }
    for (const auto& p : all)
        for (const auto& q : all) {
            if (p.tgt != q.src) continue;
            c.composition[{truncation_edge_id(p), truncation_edge_id(q)}] =
                truncation_edge_id(concat(p, q));
        }
    c.sort();
    return c;
}

std::vector<Finding> validate_functor_from_free_cat(const FunctorFromFree& f,
                                                    const FiniteGraph& base,
                                                    const FiniteCategory& cod) {
    std::vector<Finding> out;
    for (const auto& n : base.nodes) {
        auto it = f.object_map.find(n);
        if (it == f.object_map.end())
            out.push_back({"object-unmapped", {{"object", n}}});
        else if (!cod.has_object(it->second))
            out.push_back({"object-image-missing", {{"object", n}}});
    }
    for (const auto& e : base.edges) {
        auto it = f.generator_map.find(e.id);
        if (it == f.generator_map.end()) {
            out.push_back({"generator-unmapped", {{"generator", e.id}}});
            continue;
        }
        if (!is_atom(it->second)) {
            out.push_back({"generator-image-not-atomic", {{"generator", e.id}}});
            continue;
        }
        const auto* img = cod.morphism(it->second.atom);
        if (!img) {
            out.push_back({"generator-image-missing", {{"generator", e.id}}});
            continue;
        }
        if (img->dom != f.object_map.at(e.src))
            out.push_back({"source-mismatch", {{"generator", e.id}}});
        if (img->cod != f.object_map.at(e.tgt))
            out.push_back({"target-mismatch", {{"generator", e.id}}});
    }
    return out;
}

std::string eval_in_category(const FunctorFromFree& f, const FiniteCategory& cod, const Path& p) {
    std::string acc = cod.identities.at(f.object_map.at(p.src));
    for (const auto& l : p.labels) {
        if (!is_atom(l))
            throw Error("nesting-depth", "atom-labelled path expected for category evaluation");
        const Term& img = f.generator_map.at(l.atom);
        if (!is_atom(img)) throw Error("eval-kind", "category evaluation needs atomic images");
        acc = cod.compose(acc, img.atom);
    }
    return acc;
}

Path eval_in_free(const FunctorFromFree& f, const Path& p) {
    Path acc = empty_path(f.object_map.at(p.src));
    for (const auto& l : p.labels) {
        if (!is_atom(l)) throw Error("nesting-depth", "atom-labelled path expected for evaluation");
        const Term& img = f.generator_map.at(l.atom);
        if (is_atom(img)) throw Error("eval-kind", "free-codomain evaluation needs path images");
        acc = concat(acc, *img.path);
    }
    return acc;
}

FunctorFromFree counit_eps(const FiniteCategory& c) {
    FunctorFromFree f;
    for (const auto& o : c.objects) f.object_map[o] = o;
    for (const auto& m : c.morphisms) f.generator_map[m.id] = atom_term(m.id);
    return f;
}

} // namespace awfslab
