#include "awfslab/catgph.hpp"

#include <algorithm>
#include <set>

#include "awfslab/error.hpp"

namespace awfslab {

namespace {

// Shared builder for hand-written composition tables: identities and their
// composites are filled in automatically, only non-identity pairs are listed.
struct CatBuilder {
    FiniteCategory c;
    CatBuilder& obj(const std::string& o) {
        c.objects.push_back(o);
        c.morphisms.push_back({"id_" + o, o, o});
        c.identities[o] = "id_" + o;
        return *this;
    }
    CatBuilder& mor(const std::string& id, const std::string& d, const std::string& cd) {
        c.morphisms.push_back({id, d, cd});
        return *this;
    }
    CatBuilder& comp(const std::string& f, const std::string& g, const std::string& r) {
        c.composition[{f, g}] = r;
        return *this;
    }
    FiniteCategory done() {
        for (const auto& m : c.morphisms) {
            c.composition[{c.identities.at(m.dom), m.id}] = m.id;
            c.composition[{m.id, c.identities.at(m.cod)}] = m.id;
        }
        c.sort();
        return c;
    }
};

FiniteCategory parallel_pair_category() {
    return CatBuilder{}.obj("p0").obj("p1").mor("pf", "p0", "p1").mor("pg", "p0", "p1").done();
}

FiniteCategory chain2_category() {
    return CatBuilder{}
        .obj("c0")
        .obj("c1")
        .obj("c2")
        .mor("f01", "c0", "c1")
        .mor("f12", "c1", "c2")
        .mor("f02", "c0", "c2")
        .comp("f01", "f12", "f02")
        .done();
}

FiniteCategory span_category() {
    return CatBuilder{}
        .obj("s0")
        .obj("s1")
        .obj("s2")
        .mor("sl", "s0", "s1")
        .mor("sr", "s0", "s2")
        .done();
}

FiniteCategory cospan_category() {
    return CatBuilder{}
        .obj("t0")
        .obj("t1")
        .obj("t2")
        .mor("tl", "t0", "t2")
        .mor("tr", "t1", "t2")
        .done();
}

FiniteCategory iso_pair_category() {
    return CatBuilder{}
        .obj("i0")
        .obj("i1")
        .mor("f", "i0", "i1")
        .mor("g", "i1", "i0")
        .comp("f", "g", "id_i0")
        .comp("g", "f", "id_i1")
        .done();
}

FiniteCategory idempotent_category() {
    return CatBuilder{}.obj("m").mor("e", "m", "m").comp("e", "e", "e").done();
}

FiniteCategory z2_category() {
    return CatBuilder{}.obj("z").mor("s", "z", "z").comp("s", "s", "id_z").done();
}

FiniteCategory endo3_category() {
    return CatBuilder{}
        .obj("n")
        .mor("e1", "n", "n")
        .mor("e2", "n", "n")
        .comp("e1", "e1", "e2")
        .comp("e1", "e2", "e2")
        .comp("e2", "e1", "e2")
        .comp("e2", "e2", "e2")
        .done();
}

// Exactly one morphism between every ordered pair of objects.
FiniteCategory indiscrete_category(int n) {
    CatBuilder b;
    for (int i = 0; i < n; ++i) b.obj("j" + std::to_string(i));
    auto mor_name = [](int i, int j) {
        return i == j ? "id_j" + std::to_string(i)
                      : "u" + std::to_string(i) + std::to_string(j);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b.mor(mor_name(i, j), "j" + std::to_string(i), "j" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k) continue; // identity pairs are autofilled
                b.comp(mor_name(i, j), mor_name(j, k), mor_name(i, k));
            }
    return b.done();
}

FiniteCategory csquare_category() {
    return CatBuilder{}
        .obj("q00")
        .obj("q01")
        .obj("q10")
        .obj("q11")
        .mor("qf", "q00", "q01")
        .mor("qg", "q01", "q11")
        .mor("qh", "q00", "q10")
        .mor("qk", "q10", "q11")
        .mor("qd", "q00", "q11")
        .comp("qf", "qg", "qd")
        .comp("qh", "qk", "qd")
        .done();
}

FiniteCategory rename_category(const FiniteCategory& c, const std::string& prefix) {
    FiniteCategory out;
    auto ro = [&](const std::string& o) { return prefix + o; };
    for (const auto& o : c.objects) out.objects.push_back(ro(o));
    for (const auto& m : c.morphisms) out.morphisms.push_back({prefix + m.id, ro(m.dom), ro(m.cod)});
    for (const auto& [o, id] : c.identities) out.identities[ro(o)] = prefix + id;
    for (const auto& [key, r] : c.composition)
        out.composition[{prefix + key.first, prefix + key.second}] = prefix + r;
    out.sort();
    return out;
}

FiniteCategory coproduct_cats(const std::vector<FiniteCategory>& pieces) {
    FiniteCategory out;
    int k = 0;
    for (const auto& piece : pieces) {
        const auto r = rename_category(piece, "p" + std::to_string(k++) + "_");
        out.objects.insert(out.objects.end(), r.objects.begin(), r.objects.end());
        out.morphisms.insert(out.morphisms.end(), r.morphisms.begin(), r.morphisms.end());
        out.identities.insert(r.identities.begin(), r.identities.end());
        out.composition.insert(r.composition.begin(), r.composition.end());
    }
    out.sort();
    return out;
}

bool partition_bijection(const std::vector<std::vector<std::string>>& dom_parts,
                         const std::vector<std::vector<std::string>>& cod_parts,
                         const std::map<std::string, std::string>& element_map) {
    std::map<std::string, std::size_t> cod_idx;
    for (std::size_t i = 0; i < cod_parts.size(); ++i)
        for (const auto& n : cod_parts[i]) cod_idx[n] = i;
    std::set<std::size_t> used;
    for (const auto& part : dom_parts)
        if (!used.insert(cod_idx.at(element_map.at(part.front()))).second) return false;
    return used.size() == cod_parts.size();
}

} // namespace

bool cat_is_weq(const Functor& f) {
    return partition_bijection(pi0_cat(f.dom), pi0_cat(f.cod), f.object_map);
}

bool gph_is_weq(const GraphMap& f) {
    return partition_bijection(pi0_graph(f.dom), pi0_graph(f.cod), f.node_map);
}

bool gph_is_cofibration(const GraphMap& f) { return is_mono(f); }

Functor j_cat_point() {
    Functor j;
    j.dom = empty_category();
    j.cod = point_category();
    return j;
}

Functor j_cat_edge() {
    Functor j;
    j.dom = discrete_category(2);
    j.cod = arrow_category();
    j.object_map = {{"d0", "a0"}, {"d1", "a1"}};
    j.morphism_map = {{"id_d0", "id_a0"}, {"id_d1", "id_a1"}};
    return j;
}

std::vector<Functor> j_cat() { return {j_cat_point(), j_cat_edge()}; }

// --- comonad -----------------------------------------------------------------

Path delta_image(const FiniteCategory& x, const std::string& m, const ComonadOverride* ov) {
    if (ov) {
        auto it = ov->delta.find(m);
        if (it != ov->delta.end()) return it->second;
    }
    const auto* mm = x.morphism(m);
    if (!mm) throw Error("unknown-morphism", "no morphism named " + m);
    return singleton_path(mm->dom, mm->cod,
                          path_term(singleton_path(mm->dom, mm->cod, atom_term(m))));
}

namespace {

std::string eps_image(const std::string& m, const ComonadOverride* ov) {
    if (ov) {
        auto it = ov->eps.find(m);
        if (it != ov->eps.end()) return it->second;
    }
    return m;
}

// Evaluate the counit on a level-1 path: compose the generator images in x.
std::string eval_eps_path(const FiniteCategory& x, const Path& p, const ComonadOverride* ov) {
    std::optional<std::string> acc;
    for (const auto& t : p.labels) {
        const std::string img = eps_image(t.atom, ov);
        acc = acc ? x.compose(*acc, img) : img;
    }
    return acc ? *acc : x.identities.at(p.src);
}

// Concatenate the label paths of a nested path without endpoint enforcement
// (mutated inputs may be ill-glued; a mismatch then shows up as inequality).
std::optional<Path> flatten_labels(const Path& p) {
    Path flat;
    flat.src = p.src;
    flat.tgt = p.tgt;
    for (const auto& t : p.labels) {
        if (!t.path) return std::nullopt;
        for (const auto& u : t.path->labels) flat.labels.push_back(u);
    }
    return flat;
}

} // namespace

ComonadLawReport comonad_verify(const FiniteCategory& x, const ComonadOverride* ov) {
    ComonadLawReport rep;
    auto add = [&](const std::string& law, bool pass, const std::string& wit) {
        rep.laws.push_back({law, pass, pass ? std::string{} : wit});
        if (!pass) rep.all_pass = false;
    };

    for (const auto& m : x.morphisms)
        if (path_depth(delta_image(x, m.id, ov)) > kMaxNesting - 1)
            throw Error("nesting-depth", "comultiplication image of " + m.id +
                                             " exceeds the configured nesting cap");

    {
        const auto eps = counit_eps(x);
        bool ok = true;
        std::string wit;
        for (const auto& o : x.objects) {
            auto it = eps.object_map.find(o);
            if (it == eps.object_map.end() || it->second != o) {
                ok = false;
                wit = o;
                break;
            }
        }
        add("counit-identity-on-objects", ok, wit);
    }
    {
        std::set<std::string> hit;
        for (const auto& m : x.morphisms) hit.insert(eps_image(m.id, ov));
        bool ok = true;
        std::string wit;
        for (const auto& m : x.morphisms)
            if (!hit.count(m.id)) {
                ok = false;
                wit = m.id;
                break;
            }
        add("counit-surjective-on-morphisms", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (const auto& m : x.morphisms) {
            const auto flat = flatten_labels(delta_image(x, m.id, ov));
            if (!flat || *flat != singleton_path(m.dom, m.cod, atom_term(m.id))) {
                ok = false;
                wit = m.id;
                break;
            }
        }
        add("counit-left", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (const auto& m : x.morphisms) {
            const Path d = delta_image(x, m.id, ov);
            Path lhs;
            lhs.src = d.src;
            lhs.tgt = d.tgt;
            bool well_formed = true;
            for (const auto& t : d.labels) {
                if (!t.path) {
                    well_formed = false;
                    break;
                }
                lhs.labels.push_back(atom_term(eval_eps_path(x, *t.path, ov)));
            }
            if (!well_formed || lhs != singleton_path(m.dom, m.cod, atom_term(m.id))) {
                ok = false;
                wit = m.id;
                break;
            }
        }
        add("counit-right", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (const auto& m : x.morphisms) {
            const Path d = delta_image(x, m.id, ov);
            Path side1, side2;
            side1.src = side2.src = d.src;
            side1.tgt = side2.tgt = d.tgt;
            bool well_formed = true;
            for (const auto& t : d.labels) {
                if (!t.path) {
                    well_formed = false;
                    break;
                }
                const Path& l = *t.path;
                side1.labels.push_back(path_term(singleton_path(l.src, l.tgt, path_term(l))));
                Path inner;
                inner.src = l.src;
                inner.tgt = l.tgt;
                for (const auto& a : l.labels) {
                    const Path da = delta_image(x, a.atom, ov);
                    inner.labels.insert(inner.labels.end(), da.labels.begin(), da.labels.end());
                }
                side2.labels.push_back(path_term(inner));
            }
            if (!well_formed || side1 != side2) {
                ok = false;
                wit = m.id;
                break;
            }
        }
        add("coassociativity", ok, wit);
    }
    return rep;
}

// --- R-map structures --------------------------------------------------------

namespace {

std::vector<std::string> object_lift_candidates(const Functor& f, const std::string& z) {
    std::vector<std::string> out;
    for (const auto& o : f.dom.objects)
        if (f.object_map.at(o) == z) out.push_back(o);
    return out;
}

std::vector<std::string> morphism_lift_candidates(const Functor& f, const std::string& y,
                                                  const std::string& alpha,
                                                  const std::string& y2) {
    std::vector<std::string> out;
    for (const auto& id : f.dom.hom(y, y2))
        if (f.morphism_map.at(id) == alpha) out.push_back(id);
    return out;
}

using LiftKey = std::tuple<std::string, std::string, std::string>;

std::vector<LiftKey> morphism_lift_keys(const Functor& f) {
    std::vector<LiftKey> out;
    for (const auto& y : f.dom.objects)
        for (const auto& y2 : f.dom.objects)
            for (const auto& alpha : f.cod.hom(f.object_map.at(y), f.object_map.at(y2)))
                out.push_back({y, alpha, y2});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Finding> validate_rmap_structure(const RMapStructure& r) {
    std::vector<Finding> out;
    if (!validate_functor(r.f).empty()) {
        out.push_back({"invalid-functor", {}});
        return out;
    }
    for (const auto& z : r.f.cod.objects) {
        auto it = r.object_lift.find(z);
        if (it == r.object_lift.end()) {
            out.push_back({"missing-object-lift", {{"object", z}}});
            continue;
        }
        if (!r.f.dom.has_object(it->second) || r.f.object_map.at(it->second) != z)
            out.push_back({"object-lift-mismatch", {{"object", z}, {"lift", it->second}}});
    }
    for (const auto& [z, y] : r.object_lift)
        if (!r.f.cod.has_object(z)) out.push_back({"extraneous-object-lift", {{"object", z}}});
    const auto keys = morphism_lift_keys(r.f);
    const std::set<LiftKey> key_set(keys.begin(), keys.end());
    for (const auto& key : keys) {
        const auto& [y, alpha, y2] = key;
        auto it = r.morphism_lift.find(key);
        if (it == r.morphism_lift.end()) {
            out.push_back(
                {"missing-morphism-lift", {{"src", y}, {"over", alpha}, {"tgt", y2}}});
            continue;
        }
        const auto* m = r.f.dom.morphism(it->second);
        if (!m || m->dom != y || m->cod != y2)
            out.push_back(
                {"morphism-lift-endpoints", {{"src", y}, {"over", alpha}, {"lift", it->second}}});
        else if (r.f.morphism_map.at(it->second) != alpha)
            out.push_back(
                {"morphism-lift-mismatch", {{"src", y}, {"over", alpha}, {"lift", it->second}}});
    }
    for (const auto& [key, lift] : r.morphism_lift)
        if (!key_set.count(key))
            out.push_back({"extraneous-morphism-lift",
                           {{"src", std::get<0>(key)}, {"over", std::get<1>(key)},
                            {"tgt", std::get<2>(key)}}});
    return out;
}

Json rmap_to_json(const RMapStructure& r) {
    Json j;
    j["kind"] = "rmap_structure";
    j["functor"] = to_json(r.f);
    j["object_lift"] = r.object_lift;
    Json ml = Json::array();
    for (const auto& [key, lift] : r.morphism_lift)
        ml.push_back({{"src", std::get<0>(key)},
                      {"over", std::get<1>(key)},
                      {"tgt", std::get<2>(key)},
                      {"lift", lift}});
    j["morphism_lift"] = ml;
    return j;
}

RMapStructure rmap_from_json(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "rmap_structure")
        throw Error("schema", "expected kind \"rmap_structure\"");
    for (const char* k : {"functor", "object_lift", "morphism_lift"})
        if (!j.contains(k)) throw Error("schema", std::string("rmap_structure: missing ") + k);
    RMapStructure r;
    r.f = functor_from_json(j.at("functor"));
    if (!j.at("object_lift").is_object())
        throw Error("schema", "rmap_structure: object_lift must be an object");
    for (const auto& [z, y] : j.at("object_lift").items()) {
        if (!y.is_string()) throw Error("schema", "rmap_structure: object lifts are strings");
        r.object_lift[z] = y.get<std::string>();
    }
    if (!j.at("morphism_lift").is_array())
        throw Error("schema", "rmap_structure: morphism_lift must be an array");
    for (const auto& e : j.at("morphism_lift")) {
        for (const char* k : {"src", "over", "tgt", "lift"})
            if (!e.is_object() || !e.contains(k) || !e.at(k).is_string())
                throw Error("schema", "rmap_structure: morphism lifts need src, over, tgt, lift");
        r.morphism_lift[{e.at("src").get<std::string>(), e.at("over").get<std::string>(),
                         e.at("tgt").get<std::string>()}] = e.at("lift").get<std::string>();
    }
    return r;
}

std::vector<RMapStructure> rmap_structure_enumerate(const Functor& f, std::size_t limit) {
    std::vector<std::vector<std::string>> object_cands;
    for (const auto& z : f.cod.objects) object_cands.push_back(object_lift_candidates(f, z));
    const auto keys = morphism_lift_keys(f);
    std::vector<std::vector<std::string>> mor_cands;
    for (const auto& [y, alpha, y2] : keys)
        mor_cands.push_back(morphism_lift_candidates(f, y, alpha, y2));

    std::vector<RMapStructure> out;
    for (const auto& c : object_cands)
        if (c.empty()) return out;
    for (const auto& c : mor_cands)
        if (c.empty()) return out;

    std::vector<std::size_t> pick(object_cands.size() + mor_cands.size(), 0);
    while (out.size() < limit) {
        RMapStructure r;
        r.f = f;
        for (std::size_t i = 0; i < object_cands.size(); ++i)
            r.object_lift[f.cod.objects[i]] = object_cands[i][pick[i]];
        for (std::size_t i = 0; i < mor_cands.size(); ++i)
            r.morphism_lift[keys[i]] = mor_cands[i][pick[object_cands.size() + i]];
        out.push_back(std::move(r));
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            const auto width =
                i < object_cands.size() ? object_cands[i].size() : mor_cands[i - object_cands.size()].size();
            if (++pick[i] < width) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (pick.empty()) return out; // no choice points: the single structure
    }
    return out;
}

SectionReport rmap_iff_section(const Functor& f, std::size_t structure_cap) {
    if (!bijective_on_objects(f))
        throw Error("not-bijective-on-objects",
                    "the correspondence check requires a functor bijective on objects");
    SectionReport rep;
    rep.structure_cap = structure_cap;

    rep.structure_exists = true;
    for (const auto& z : f.cod.objects)
        if (object_lift_candidates(f, z).empty()) rep.structure_exists = false;
    for (const auto& [y, alpha, y2] : morphism_lift_keys(f))
        if (morphism_lift_candidates(f, y, alpha, y2).empty()) rep.structure_exists = false;
    rep.structure_count = rmap_structure_enumerate(f, structure_cap).size();

    const GraphMap uf = underlying_graph_map(f);
    const GraphMap id_cod = identity_graph_map(uf.cod);
    for (const auto& s : hom_graph_maps(uf.cod, uf.dom))
        if (compose(uf, s) == id_cod) ++rep.section_count;
    rep.section_exists = rep.section_count > 0;

    rep.agree = rep.structure_exists == rep.section_exists;
    return rep;
}

// --- free R-map universal property -------------------------------------------

std::vector<FunctorFromFree> enumerate_functors_from_free(const FiniteGraph& base,
                                                          const FiniteCategory& cod) {
    std::vector<FunctorFromFree> out;
    if (cod.objects.empty()) {
        if (base.nodes.empty()) out.push_back({});
        return out;
    }
    std::vector<std::size_t> opick(base.nodes.size(), 0);
    while (true) {
        FunctorFromFree h;
        for (std::size_t i = 0; i < base.nodes.size(); ++i)
            h.object_map[base.nodes[i]] = cod.objects[opick[i]];
        // generator images under these node images, odometer over hom-sets
        std::vector<std::vector<std::string>> cands;
        bool feasible = true;
        for (const auto& e : base.edges) {
            cands.push_back(cod.hom(h.object_map.at(e.src), h.object_map.at(e.tgt)));
            if (cands.back().empty()) feasible = false;
        }
        if (feasible) {
            std::vector<std::size_t> epick(cands.size(), 0);
            while (true) {
                FunctorFromFree full = h;
                for (std::size_t i = 0; i < cands.size(); ++i)
                    full.generator_map[base.edges[i].id] = atom_term(cands[i][epick[i]]);
                out.push_back(std::move(full));
                std::size_t i = epick.size();
                bool done = true;
                while (i > 0) {
                    --i;
                    if (++epick[i] < cands[i].size()) {
                        done = false;
                        break;
                    }
                    epick[i] = 0;
                }
                if (done) break;
            }
        }
        std::size_t i = opick.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++opick[i] < cod.objects.size()) {
                done = false;
                break;
            }
            opick[i] = 0;
        }
        if (done) break;
    }
    return out;
}

MediatorCertificate free_rmap_mediator(const Functor& g, const RMapStructure& r) {
    if (!(g.cod == r.f.cod))
        throw Error("compose-mismatch", "g and the structured map must share their codomain");
    if (!validate_functor(g).empty()) throw Error("invalid-functor", "g is not a functor");
    if (!validate_rmap_structure(r).empty())
        throw Error("invalid-rmap-structure", "the supplied lifting data is not total and valid");

    const FiniteCategory& x = g.dom;
    const FiniteCategory& y = r.f.dom;
    MediatorCertificate cert;

    for (const auto& o : x.objects)
        cert.gbar.object_map[o] = r.object_lift.at(g.object_map.at(o));
    for (const auto& m : x.morphisms) {
        const auto& ly = cert.gbar.object_map.at(m.dom);
        const auto& ly2 = cert.gbar.object_map.at(m.cod);
        cert.gbar.generator_map[m.id] =
            atom_term(r.morphism_lift.at({ly, g.morphism_map.at(m.id), ly2}));
    }

    auto square_ok = [&](const FunctorFromFree& h) {
        for (const auto& o : x.objects)
            if (r.f.object_map.at(h.object_map.at(o)) != g.object_map.at(o)) return false;
        for (const auto& m : x.morphisms)
            if (r.f.morphism_map.at(h.generator_map.at(m.id).atom) != g.morphism_map.at(m.id))
                return false;
        return true;
    };
    auto morphism_ok = [&](const FunctorFromFree& h) {
        for (const auto& o : x.objects)
            if (h.object_map.at(o) != r.object_lift.at(g.object_map.at(o))) return false;
        for (const auto& m : x.morphisms) {
            auto it = r.morphism_lift.find(
                {h.object_map.at(m.dom), g.morphism_map.at(m.id), h.object_map.at(m.cod)});
            if (it == r.morphism_lift.end() || h.generator_map.at(m.id).atom != it->second)
                return false;
        }
        return true;
    };

    cert.square_ok = square_ok(cert.gbar);
    cert.morphism_ok = morphism_ok(cert.gbar);
    for (const auto& h : enumerate_functors_from_free(underlying_graph(x), y)) {
        if (!square_ok(h)) continue;
        ++cert.square_candidates;
        if (morphism_ok(h)) ++cert.morphism_candidates;
    }
    cert.unique = cert.morphism_ok && cert.morphism_candidates == 1;
    return cert;
}

// --- the codiagonal counterexample -------------------------------------------

GraphMap codiagonal_map() {
    GraphMap f;
    f.dom = discrete_graph({"x0", "x1"});
    f.cod = single_node("pt");
    f.node_map = {{"x0", "pt"}, {"x1", "pt"}};
    return f;
}

StructuralCheck edge_free_codomain_check(const GraphMap& f) {
    StructuralCheck c;
    c.applies = f.cod.edges.empty();
    if (!c.applies) return c;
    std::set<std::string> img;
    for (const auto& [_, v] : f.node_map) img.insert(v);
    c.holds = img.size() == f.cod.nodes.size();
    return c;
}

CodiagonalReport codiagonal_counterexample(int probe_nodes, int probe_edges) {
    CodiagonalReport rep;
    const GraphMap f = codiagonal_map();
    rep.pi0_dom = pi0_graph(f.dom).size();
    rep.pi0_cod = pi0_graph(f.cod).size();
    rep.weq = gph_is_weq(f);
    rep.shortcut = edge_free_codomain_check(f);
    rep.probe = rlp_probe_gph(f, probe_nodes, probe_edges);
    rep.conclusion = (!rep.weq && rep.shortcut.applies && rep.shortcut.holds && rep.probe.holds)
                         ? "trivial fibration but not a weak equivalence"
                         : "inconclusive";
    return rep;
}

// --- free functor on cofibrations --------------------------------------------

std::vector<Functor> full_surjective_probe_family() {
    std::vector<Functor> out;
    out.push_back(identity_functor(point_category()));
    out.push_back(identity_functor(arrow_category()));

    auto collapse_to_point = [](const FiniteCategory& c) {
        Functor f;
        f.dom = c;
        f.cod = point_category();
        for (const auto& o : c.objects) f.object_map[o] = "pt";
        for (const auto& m : c.morphisms) f.morphism_map[m.id] = "id_pt";
        return f;
    };
    out.push_back(collapse_to_point(iso_pair_category()));
    out.push_back(collapse_to_point(z2_category()));
    out.push_back(collapse_to_point(indiscrete_category(3)));

    {
        Functor f; // merge the parallel pair onto the arrow
        f.dom = parallel_pair_category();
        f.cod = arrow_category();
        f.object_map = {{"p0", "a0"}, {"p1", "a1"}};
        f.morphism_map = {{"id_p0", "id_a0"}, {"id_p1", "id_a1"}, {"pf", "f"}, {"pg", "f"}};
        out.push_back(f);
    }
    {
        Functor f; // squash one indiscrete object pair
        f.dom = indiscrete_category(3);
        f.cod = indiscrete_category(2);
        f.object_map = {{"j0", "j0"}, {"j1", "j1"}, {"j2", "j1"}};
        auto img = [&](const std::string& a, const std::string& b) {
            return a == b ? "id_" + a : "u" + a.substr(1) + b.substr(1);
        };
        for (const auto& m : f.dom.morphisms)
            f.morphism_map[m.id] = img(f.object_map.at(m.dom), f.object_map.at(m.cod));
        out.push_back(f);
    }
    return out;
}

namespace {

bool ff_square_commutes(const GraphMap& f, const Functor& q, const FunctorFromFree& u,
                        const FunctorFromFree& v) {
    for (const auto& n : f.dom.nodes)
        if (q.object_map.at(u.object_map.at(n)) != v.object_map.at(f.node_map.at(n)))
            return false;
    for (const auto& e : f.dom.edges)
        if (q.morphism_map.at(u.generator_map.at(e.id).atom) !=
            v.generator_map.at(f.edge_map.at(e.id)).atom)
            return false;
    return true;
}

// Search a diagonal d with d∘Ff = u and q∘d = v; f is a mono, so the image
// part of d is forced and only the complement is searched.
bool ff_llp_fill(const GraphMap& f, const Functor& q, const FunctorFromFree& u,
                 const FunctorFromFree& v) {
    std::map<std::string, std::string> ninv, einv;
    for (const auto& [n, img] : f.node_map) ninv[img] = n;
    for (const auto& [e, img] : f.edge_map) einv[img] = e;

    std::vector<std::string> free_nodes;
    std::map<std::string, std::string> node_img;
    for (const auto& n : f.cod.nodes) {
        auto it = ninv.find(n);
        if (it != ninv.end())
            node_img[n] = u.object_map.at(it->second);
        else
            free_nodes.push_back(n);
    }
    std::vector<std::vector<std::string>> node_cands;
    for (const auto& n : free_nodes) {
        std::vector<std::string> c;
        for (const auto& o : q.dom.objects)
            if (q.object_map.at(o) == v.object_map.at(n)) c.push_back(o);
        if (c.empty()) return false;
        node_cands.push_back(std::move(c));
    }

    std::vector<std::size_t> pick(free_nodes.size(), 0);
    while (true) {
        auto d_nodes = node_img;
        for (std::size_t i = 0; i < free_nodes.size(); ++i)
            d_nodes[free_nodes[i]] = node_cands[i][pick[i]];
        bool ok = true;
        for (const auto& e : f.cod.edges) {
            auto it = einv.find(e.id);
            if (it != einv.end()) {
                const auto& forced = u.generator_map.at(it->second).atom;
                const auto* m = q.dom.morphism(forced);
                if (m->dom != d_nodes.at(e.src) || m->cod != d_nodes.at(e.tgt)) ok = false;
            } else {
                bool found = false;
                for (const auto& id : q.dom.hom(d_nodes.at(e.src), d_nodes.at(e.tgt)))
                    if (q.morphism_map.at(id) == v.generator_map.at(e.id).atom) found = true;
                if (!found) ok = false;
            }
            if (!ok) break;
        }
        if (ok) return true;
        std::size_t i = pick.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < node_cands[i].size()) {
                done = false;
                break;
            }
            pick[i] = 0;
        }
        if (done) return false;
    }
}

} // namespace

FreeCofProbeReport f_preserves_cofibrations_probe(int probe_nodes, int probe_edges) {
    FreeCofProbeReport rep;
    rep.probe_nodes = probe_nodes;
    rep.probe_edges = probe_edges;
    const auto rights = full_surjective_probe_family();
    rep.rights_checked = rights.size();
    for (const auto& b : canonical_graphs(probe_nodes, probe_edges))
        for (const auto& incl : subgraph_inclusions(b)) {
            ++rep.monos_checked;
            for (std::size_t qi = 0; qi < rights.size(); ++qi) {
                const auto& q = rights[qi];
                const auto us = enumerate_functors_from_free(incl.dom, q.dom);
                const auto vs = enumerate_functors_from_free(incl.cod, q.cod);
                for (const auto& u : us)
                    for (const auto& v : vs) {
                        if (!ff_square_commutes(incl, q, u, v)) continue;
                        ++rep.squares_checked;
                        if (!ff_llp_fill(incl, q, u, v)) {
                            rep.all_pass = false;
                            rep.witness = "right-leg " + std::to_string(qi) + " over a square on " +
                                          std::to_string(b.nodes.size()) + " nodes";
                            return rep;
                        }
                    }
            }
        }
    return rep;
}

// --- corpus ------------------------------------------------------------------

std::vector<NamedCategory> curated_categories() {
    return {
        {"empty", empty_category()},
        {"point", point_category()},
        {"discrete2", discrete_category(2)},
        {"discrete3", discrete_category(3)},
        {"arrow", arrow_category()},
        {"parallel_pair", parallel_pair_category()},
        {"chain2", chain2_category()},
        {"span", span_category()},
        {"cospan", cospan_category()},
        {"iso_pair", iso_pair_category()},
        {"idempotent", idempotent_category()},
        {"z2", z2_category()},
        {"endo3", endo3_category()},
        {"indiscrete3", indiscrete_category(3)},
        {"csquare", csquare_category()},
    };
}

FiniteCategory random_category(Rng& rng) {
    switch (rng.below(4)) {
    case 0: { // random preorder on up to 3 objects
        const int n = 1 + static_cast<int>(rng.below(3));
        bool rel[3][3] = {};
        for (int i = 0; i < n; ++i) rel[i][i] = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && rng.chance(1, 2)) rel[i][j] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel[i][k] && rel[k][j]) rel[i][j] = true;
        CatBuilder b;
        auto oname = [](int i) { return "o" + std::to_string(i); };
        auto mname = [&](int i, int j) {
            return i == j ? "id_o" + std::to_string(i)
                          : "r" + std::to_string(i) + std::to_string(j);
        };
        for (int i = 0; i < n; ++i) b.obj(oname(i));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && rel[i][j]) b.mor(mname(i, j), oname(i), oname(j));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (i != j && j != k && rel[i][j] && rel[j][k])
                        b.comp(mname(i, j), mname(j, k), mname(i, k));
        return b.done();
    }
    case 1: { // free category on a small acyclic graph
        const int n = 1 + static_cast<int>(rng.below(3));
        FiniteGraph g;
        for (int i = 0; i < n; ++i) g.nodes.push_back("g" + std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance(1, 2))
                    g.edges.push_back({"e" + std::to_string(i) + std::to_string(j),
                                       "g" + std::to_string(i), "g" + std::to_string(j)});
        g.sort();
        return finite_free_category(g);
    }
    case 2: { // coproduct of small pieces, at most 3 objects in total
        const std::vector<FiniteCategory> menu = {point_category(), arrow_category(),
                                                  iso_pair_category(), z2_category(),
                                                  idempotent_category()};
        std::vector<FiniteCategory> pieces;
        std::size_t objects = 0;
        const std::size_t want = 1 + rng.below(2);
        while (pieces.size() < want) {
            const auto& c = menu[static_cast<std::size_t>(rng.below(menu.size()))];
            if (objects + c.objects.size() > 3) break;
            objects += c.objects.size();
            pieces.push_back(c);
        }
        if (pieces.empty()) pieces.push_back(point_category());
        return coproduct_cats(pieces);
    }
    default: { // a one-object monoid
        const std::vector<FiniteCategory> menu = {point_category(), z2_category(),
                                                  idempotent_category(), endo3_category()};
        return menu[static_cast<std::size_t>(rng.below(menu.size()))];
    }
    }
}

FiniteGraph random_graph(Rng& rng, int max_nodes, int max_edges) {
    FiniteGraph g;
    const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes) + 1));
    for (int i = 0; i < n; ++i) g.nodes.push_back("v" + std::to_string(i));
    if (n > 0) {
        const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges) + 1));
        for (int i = 0; i < m; ++i)
            g.edges.push_back({"e" + std::to_string(i),
                               g.nodes[static_cast<std::size_t>(rng.below(n))],
                               g.nodes[static_cast<std::size_t>(rng.below(n))]});
    }
    g.sort();
    return g;
}

std::vector<ComonadMutation> comonad_mutations() {
    std::vector<ComonadMutation> out;
    auto lvl1 = [](const std::string& src, const std::string& tgt,
                   std::vector<std::string> atoms) {
        Path p;
        p.src = src;
        p.tgt = tgt;
        for (auto& a : atoms) p.labels.push_back(atom_term(a));
        return p;
    };
    auto wrap = [](std::vector<Path> inners, const std::string& src, const std::string& tgt) {
        Path p;
        p.src = src;
        p.tgt = tgt;
        for (auto& q : inners) p.labels.push_back(path_term(q));
        return p;
    };

    {
        ComonadMutation m{"delta-prepend-identity", arrow_category(), {}};
        m.ov.delta["f"] = wrap({lvl1("a0", "a1", {"id_a0", "f"})}, "a0", "a1");
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"delta-duplicate", z2_category(), {}};
        m.ov.delta["s"] = wrap({lvl1("z", "z", {"s"}), lvl1("z", "z", {"s"})}, "z", "z");
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"delta-empty", point_category(), {}};
        m.ov.delta["id_pt"] = wrap({}, "pt", "pt");
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"delta-wrong-generator", endo3_category(), {}};
        m.ov.delta["e1"] = wrap({lvl1("n", "n", {"e2"})}, "n", "n");
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"delta-append-identity", arrow_category(), {}};
        m.ov.delta["f"] = wrap({lvl1("a0", "a1", {"f"}), lvl1("a1", "a1", {"id_a1"})}, "a0", "a1");
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"delta-split-composite", chain2_category(), {}};
        m.ov.delta["f02"] = wrap({lvl1("c0", "c2", {"f01", "f12"})}, "c0", "c2");
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"eps-swap-parallel", parallel_pair_category(), {}};
        m.ov.eps["pf"] = "pg";
        m.ov.eps["pg"] = "pf";
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"eps-collapse-parallel", parallel_pair_category(), {}};
        m.ov.eps["pf"] = "pg";
        out.push_back(std::move(m));
    }
    {
        ComonadMutation m{"eps-to-identity", z2_category(), {}};
        m.ov.eps["s"] = "id_z";
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace awfslab
