#include "awfslab/category.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "awfslab/error.hpp"
#include "json.hpp"

namespace awfslab {

const FiniteCategory::Morphism* FiniteCategory::morphism(const std::string& id) const {
    auto it = std::lower_bound(morphisms.begin(), morphisms.end(), id,
                               [](const Morphism& m, const std::string& s) { return m.id < s; });
    if (it != morphisms.end() && it->id == id) return &*it;
    return nullptr;
}

bool FiniteCategory::has_object(const std::string& o) const {
    return std::binary_search(objects.begin(), objects.end(), o);
}

std::string FiniteCategory::compose(const std::string& f, const std::string& g) const {
    auto it = composition.find({f, g});
    if (it == composition.end())
        throw Error("composition-missing", "no composition entry for (" + f + ", " + g + ")");
    return it->second;
}

std::vector<std::string> FiniteCategory::hom(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
        if (m.dom == a && m.cod == b) out.push_back(m.id);
    return out;
}

void FiniteCategory::sort() {
    std::sort(objects.begin(), objects.end());
    std::sort(morphisms.begin(), morphisms.end(),
              [](const Morphism& a, const Morphism& b) { return a.id < b.id; });
}

std::vector<Finding> validate_category(const FiniteCategory& c) {
    std::vector<Finding> out;
    std::set<std::string> objs(c.objects.begin(), c.objects.end());
    for (const auto& m : c.morphisms) {
        if (!objs.count(m.dom)) out.push_back({"dangling-endpoint", {{"morphism", m.id}, {"object", m.dom}}});
        if (!objs.count(m.cod)) out.push_back({"dangling-endpoint", {{"morphism", m.id}, {"object", m.cod}}});
    }
    for (const auto& o : c.objects) {
        auto it = c.identities.find(o);
        if (it == c.identities.end()) {
            out.push_back({"identity-missing", {{"object", o}}});
            continue;
        }
        const auto* m = c.morphism(it->second);
        if (!m)
            out.push_back({"identity-unknown", {{"object", o}, {"morphism", it->second}}});
        else if (m->dom != o || m->cod != o)
            out.push_back({"identity-endpoints", {{"object", o}, {"morphism", m->id}}});
    }
    // composition totality and endpoints
    for (const auto& f : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (f.cod != g.dom) continue;
            auto it = c.composition.find({f.id, g.id});
            if (it == c.composition.end()) {
                out.push_back({"composition-missing", {{"first", f.id}, {"second", g.id}}});
                continue;
            }
            const auto* r = c.morphism(it->second);
            if (!r)
                out.push_back({"composition-unknown", {{"first", f.id}, {"second", g.id}, {"result", it->second}}});
            else if (r->dom != f.dom || r->cod != g.cod)
                out.push_back({"composition-endpoints", {{"first", f.id}, {"second", g.id}, {"result", r->id}}});
        }
    for (const auto& [key, r] : c.composition) {
        const auto* f = c.morphism(key.first);
        const auto* g = c.morphism(key.second);
        if (!f || !g || f->cod != g->dom)
            out.push_back({"composition-extraneous", {{"first", key.first}, {"second", key.second}, {"result", r}}});
    }
    if (!out.empty()) return out; // unit/associativity need a well-formed table
    for (const auto& m : c.morphisms) {
        if (c.compose(c.identities.at(m.dom), m.id) != m.id)
            out.push_back({"left-unit", {{"morphism", m.id}}});
        if (c.compose(m.id, c.identities.at(m.cod)) != m.id)
            out.push_back({"right-unit", {{"morphism", m.id}}});
    }
    for (const auto& f : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (f.cod != g.dom) continue;
            for (const auto& h : c.morphisms) {
                if (g.cod != h.dom) continue;
                const auto left = c.compose(c.compose(f.id, g.id), h.id);
                const auto right = c.compose(f.id, c.compose(g.id, h.id));
                if (left != right)
                    out.push_back({"associativity",
                                   {{"first", f.id}, {"second", g.id}, {"third", h.id}}});
            }
        }
    return out;
}

std::vector<Finding> validate_functor(const Functor& f) {
    std::vector<Finding> out;
    for (const auto& o : f.dom.objects) {
        auto it = f.object_map.find(o);
        if (it == f.object_map.end())
            out.push_back({"object-unmapped", {{"object", o}}});
        else if (!f.cod.has_object(it->second))
            out.push_back({"object-image-missing", {{"object", o}}});
    }
    for (const auto& m : f.dom.morphisms) {
        auto it = f.morphism_map.find(m.id);
        if (it == f.morphism_map.end()) {
            out.push_back({"morphism-unmapped", {{"morphism", m.id}}});
            continue;
        }
        const auto* img = f.cod.morphism(it->second);
        if (!img) {
            out.push_back({"morphism-image-missing", {{"morphism", m.id}}});
            continue;
        }
        auto dit = f.object_map.find(m.dom);
        auto cit = f.object_map.find(m.cod);
        if (dit != f.object_map.end() && img->dom != dit->second)
            out.push_back({"source-mismatch", {{"morphism", m.id}}});
        if (cit != f.object_map.end() && img->cod != cit->second)
            out.push_back({"target-mismatch", {{"morphism", m.id}}});
    }
    if (!out.empty()) return out;
    for (const auto& [o, id] : f.dom.identities)
        if (f.morphism_map.at(id) != f.cod.identities.at(f.object_map.at(o)))
            out.push_back({"identity-not-preserved", {{"object", o}}});
    for (const auto& [key, r] : f.dom.composition) {
        const auto img = f.cod.compose(f.morphism_map.at(key.first), f.morphism_map.at(key.second));
        if (img != f.morphism_map.at(r))
            out.push_back({"composition-not-preserved", {{"first", key.first}, {"second", key.second}}});
    }
    return out;
}

Functor identity_functor(const FiniteCategory& c) {
    Functor f;
    f.dom = c;
    f.cod = c;
    for (const auto& o : c.objects) f.object_map[o] = o;
    for (const auto& m : c.morphisms) f.morphism_map[m.id] = m.id;
    return f;
}

Functor compose(const Functor& g, const Functor& f) {
    if (!(f.cod == g.dom)) throw Error("compose-mismatch", "functor composition: cod(f) != dom(g)");
    Functor h;
    h.dom = f.dom;
    h.cod = g.cod;
    for (const auto& [o, img] : f.object_map) h.object_map[o] = g.object_map.at(img);
    for (const auto& [m, img] : f.morphism_map) h.morphism_map[m] = g.morphism_map.at(img);
    return h;
}

FiniteGraph underlying_graph(const FiniteCategory& c) {
    FiniteGraph g;
    g.nodes = c.objects;
    for (const auto& m : c.morphisms) g.edges.push_back({m.id, m.dom, m.cod});
    g.sort();
    return g;
}

GraphMap underlying_graph_map(const Functor& f) {
    GraphMap m;
    m.dom = underlying_graph(f.dom);
    m.cod = underlying_graph(f.cod);
    m.node_map = f.object_map;
    m.edge_map = f.morphism_map;
    return m;
}

std::vector<std::vector<std::string>> pi0_cat(const FiniteCategory& c) {
    return pi0_graph(underlying_graph(c));
}

std::vector<Functor> hom_functors(const FiniteCategory& dom, const FiniteCategory& cod) {
    std::vector<Functor> out;
    if (!dom.objects.empty() && cod.objects.empty()) return out;

    std::vector<std::string> free_morphs; // non-identity morphisms, sorted order
    std::set<std::string> idset;
    for (const auto& [_, id] : dom.identities) idset.insert(id);
    for (const auto& m : dom.morphisms)
        if (!idset.count(m.id)) free_morphs.push_back(m.id);

    std::map<std::string, std::string> omap, mmap;

    std::function<void(std::size_t)> assign_morph = [&](std::size_t k) {
        if (k == free_morphs.size()) {
            Functor f;
            f.dom = dom;
            f.cod = cod;
            f.object_map = omap;
            f.morphism_map = mmap;
            out.push_back(std::move(f));
            return;
        }
        const auto* m = dom.morphism(free_morphs[k]);
        for (const auto& cand : cod.hom(omap.at(m->dom), omap.at(m->cod))) {
            mmap[m->id] = cand;
            bool ok = true;
            // composition closure over fully assigned entries
            for (const auto& [key, r] : dom.composition) {
                auto f1 = mmap.find(key.first);
                auto f2 = mmap.find(key.second);
                auto fr = mmap.find(r);
                if (f1 == mmap.end() || f2 == mmap.end() || fr == mmap.end()) continue;
                if (cod.compose(f1->second, f2->second) != fr->second) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign_morph(k + 1);
            mmap.erase(m->id);
        }
    };

    std::function<void(std::size_t)> assign_obj = [&](std::size_t k) {
        if (k == dom.objects.size()) {
            mmap.clear();
            for (const auto& [o, id] : dom.identities)
                mmap[id] = cod.identities.at(omap.at(o));
            assign_morph(0);
            return;
        }
        for (const auto& target : cod.objects) {
            omap[dom.objects[k]] = target;
            assign_obj(k + 1);
        }
        omap.erase(dom.objects[k]);
    };

    assign_obj(0);
    return out;
}

bool surjective_on_objects(const Functor& f) {
    std::set<std::string> img;
    for (const auto& [_, v] : f.object_map) img.insert(v);
    return img.size() == f.cod.objects.size();
}

bool bijective_on_objects(const Functor& f) {
    std::set<std::string> img;
    for (const auto& [_, v] : f.object_map) img.insert(v);
    return img.size() == f.object_map.size() && img.size() == f.cod.objects.size();
}

bool full_functor(const Functor& f) {
    for (const auto& x : f.dom.objects)
        for (const auto& y : f.dom.objects) {
            const auto fx = f.object_map.at(x);
            const auto fy = f.object_map.at(y);
            for (const auto& alpha : f.cod.hom(fx, fy)) {
                bool hit = false;
                for (const auto& m : f.dom.hom(x, y))
                    if (f.morphism_map.at(m) == alpha) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
        }
    return true;
}

FiniteCategory empty_category() { return {}; }

FiniteCategory point_category() {
    FiniteCategory c;
    c.objects = {"pt"};
    c.morphisms = {{"id_pt", "pt", "pt"}};
    c.identities["pt"] = "id_pt";
    c.composition[{"id_pt", "id_pt"}] = "id_pt";
    return c;
}

FiniteCategory discrete_category(int n) {
    FiniteCategory c;
    for (int i = 0; i < n; ++i) {
        std::string o = "d" + std::to_string(i);
        c.objects.push_back(o);
        c.morphisms.push_back({"id_" + o, o, o});
        c.identities[o] = "id_" + o;
        c.composition[{"id_" + o, "id_" + o}] = "id_" + o;
    }
    c.sort();
    return c;
}

FiniteCategory arrow_category() {
    FiniteCategory c;
    c.objects = {"a0", "a1"};
    c.morphisms = {{"f", "a0", "a1"}, {"id_a0", "a0", "a0"}, {"id_a1", "a1", "a1"}};
    c.identities["a0"] = "id_a0";
    c.identities["a1"] = "id_a1";
    c.composition[{"id_a0", "id_a0"}] = "id_a0";
    c.composition[{"id_a1", "id_a1"}] = "id_a1";
    c.composition[{"id_a0", "f"}] = "f";
    c.composition[{"f", "id_a1"}] = "f";
    c.sort();
    return c;
}

bool CatCtx::mono(const Map& f) const {
    std::set<std::string> oimg, mimg;
    for (const auto& [_, v] : f.object_map)
        if (!oimg.insert(v).second) return false;
    for (const auto& [_, v] : f.morphism_map)
        if (!mimg.insert(v).second) return false;
    return true;
}

std::string CatCtx::canon(const Map& f) const {
    nlohmann::json j;
    j["object_map"] = f.object_map;
    j["morphism_map"] = f.morphism_map;
    return j.dump();
}

std::optional<Functor> CatCtx::factor_through_mono(const Map& i, const Map& k) const {
    if (!(i.cod == k.cod)) return std::nullopt;
    std::map<std::string, std::string> oinv, minv;
    for (const auto& [o, img] : i.object_map)
        if (!oinv.emplace(img, o).second) return std::nullopt;
    for (const auto& [m, img] : i.morphism_map)
        if (!minv.emplace(img, m).second) return std::nullopt;
    Functor k0;
    k0.dom = k.dom;
    k0.cod = i.dom;
    for (const auto& [o, img] : k.object_map) {
        auto it = oinv.find(img);
        if (it == oinv.end()) return std::nullopt;
        k0.object_map[o] = it->second;
    }
    for (const auto& [m, img] : k.morphism_map) {
        auto it = minv.find(img);
        if (it == minv.end()) return std::nullopt;
        k0.morphism_map[m] = it->second;
    }
    return k0;
}

} // namespace awfslab
