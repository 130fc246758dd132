#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "awfslab/algebra.hpp"
#include "awfslab/error.hpp"
#include "awfslab/lifting.hpp"

namespace awfslab {

// An object X together with a chosen extension x(j,a) : B -> X along every
// j : A -> B in the generating set, for every attaching map a : A -> X.
template <class Ctx>
struct JFibObject {
    struct Entry {
        typename Ctx::Map a, ext;
    };
    using Key = std::pair<int, std::string>;

    typename Ctx::Object carrier;
    std::vector<typename Ctx::Map> generators;
    std::map<Key, Entry> chooser;
};

template <class Ctx>
typename JFibObject<Ctx>::Key chooser_key(const Ctx& ctx, int j, const typename Ctx::Map& a) {
    return {j, ctx.canon(a)};
}

template <class Ctx>
std::vector<Finding> validate_jfib(const Ctx& ctx, const JFibObject<Ctx>& x) {
    std::vector<Finding> out;
    std::map<typename JFibObject<Ctx>::Key, bool> expected;
    for (int j = 0; j < static_cast<int>(x.generators.size()); ++j)
        for (const auto& a : ctx.hom(ctx.dom(x.generators[j]), x.carrier)) {
            auto key = chooser_key(ctx, j, a);
            expected[key] = true;
            if (!x.chooser.count(key))
                out.push_back({"missing-entry",
                               {{"generator", std::to_string(j)}, {"attach", key.second}}});
        }
    for (const auto& [key, e] : x.chooser) {
        const int j = key.first;
        if (j < 0 || j >= static_cast<int>(x.generators.size()) || !expected.count(key)) {
            out.push_back({"extraneous-entry", {{"attach", key.second}}});
            continue;
        }
        if (!ctx.valid(e.ext) || !(ctx.dom(e.ext) == ctx.cod(x.generators[j])) ||
            !(ctx.cod(e.ext) == x.carrier)) {
            out.push_back({"bad-extension-map",
                           {{"generator", std::to_string(j)}, {"attach", key.second}}});
            continue;
        }
        if (!ctx.equal(ctx.compose(e.ext, x.generators[j]), e.a))
            out.push_back({"extension-equation",
                           {{"generator", std::to_string(j)}, {"attach", key.second}}});
    }
    return out;
}

enum class FillerPick { First, Last };

template <class Ctx>
struct MakeJfibResult {
    std::optional<JFibObject<Ctx>> fib;
    std::optional<std::pair<int, typename Ctx::Map>> witness; // unsolvable (j, a)
};

// Equip a carrier by choosing, for each (j, a), the lexicographically first
// (or last) extension along j.
template <class Ctx>
MakeJfibResult<Ctx> make_jfib(const Ctx& ctx, const typename Ctx::Object& carrier,
                              const std::vector<typename Ctx::Map>& J,
                              FillerPick pick = FillerPick::First) {
    JFibObject<Ctx> x;
    x.carrier = carrier;
    x.generators = J;
    for (int j = 0; j < static_cast<int>(J.size()); ++j) {
        const auto exts = ctx.hom(ctx.cod(J[j]), carrier);
        for (const auto& a : ctx.hom(ctx.dom(J[j]), carrier)) {
            const typename Ctx::Map* hit = nullptr;
            for (const auto& e : exts)
                if (ctx.equal(ctx.compose(e, J[j]), a)) {
                    hit = &e;
                    if (pick == FillerPick::First) break;
                }
            if (!hit) return {std::nullopt, std::make_pair(j, a)};
            x.chooser[chooser_key(ctx, j, a)] = {a, *hit};
        }
    }
    return {std::move(x), std::nullopt};
}

template <class Ctx>
struct JfibMorphismReport {
    bool ok = true;
    std::optional<typename JFibObject<Ctx>::Key> violation;
};

// f preserves the chosen extensions: f ∘ x(j,a) = y(j, f∘a) for all (j, a).
template <class Ctx>
JfibMorphismReport<Ctx> is_jfib_morphism(const Ctx& ctx, const typename Ctx::Map& f,
                                         const JFibObject<Ctx>& x, const JFibObject<Ctx>& y) {
    if (x.generators.size() != y.generators.size())
        throw Error("generator-mismatch", "the two structures use different generating sets");
    for (std::size_t k = 0; k < x.generators.size(); ++k)
        if (!ctx.equal(x.generators[k], y.generators[k]))
            throw Error("generator-mismatch", "the two structures use different generating sets");
    if (!(ctx.dom(f) == x.carrier) || !(ctx.cod(f) == y.carrier))
        throw Error("compose-mismatch", "map endpoints do not match the structures");
    JfibMorphismReport<Ctx> rep;
    for (const auto& [key, e] : x.chooser) {
        auto it = y.chooser.find(chooser_key(ctx, key.first, ctx.compose(f, e.a)));
        if (it == y.chooser.end() || !ctx.equal(ctx.compose(f, e.ext), it->second.ext)) {
            rep.ok = false;
            rep.violation = key;
            return rep;
        }
    }
    return rep;
}

template <class Ctx>
struct Lemma62Result {
    std::vector<Finding> rejected; // violated hypotheses with witnesses; empty on success
    std::optional<JFibObject<Ctx>> z;
    std::size_t through_mono = 0; // problems routed through the factorisation case
    std::size_t over_fibration = 0;
};

// Lift J-fibrant structure through a factorisation  X -i-> Z -q-> Y  of a
// structure-preserving map, i a mono and q a J-fibration: attaching maps that
// factor through i reuse x's choice pushed forward along i; the rest are
// filled over q against y's choice as the bottom.
template <class Ctx>
Lemma62Result<Ctx> lemma62_extend(const Ctx& ctx, const JFibObject<Ctx>& x,
                                  const JFibObject<Ctx>& y, const typename Ctx::Map& i,
                                  const typename Ctx::Map& q,
                                  FillerPick pick = FillerPick::First) {
    if (x.generators.size() != y.generators.size())
        throw Error("generator-mismatch", "the two structures use different generating sets");
    for (std::size_t k = 0; k < x.generators.size(); ++k)
        if (!ctx.equal(x.generators[k], y.generators[k]))
            throw Error("generator-mismatch", "the two structures use different generating sets");
    if (!(ctx.dom(i) == x.carrier) || !(ctx.cod(i) == ctx.dom(q)) || !(ctx.cod(q) == y.carrier))
        throw Error("compose-mismatch", "factorisation endpoints do not match the structures");

    const auto& J = x.generators;
    Lemma62Result<Ctx> res;
    if (!ctx.mono(i)) res.rejected.push_back({"not-a-monomorphism", {{"leg", "i"}}});
    auto rlp = has_rlp(ctx, q, J);
    if (!rlp.holds) {
        Finding f{"not-a-j-fibration", {{"leg", "q"}}};
        if (rlp.witness) {
            f.detail["top"] = ctx.canon(rlp.witness->top);
            f.detail["bottom"] = ctx.canon(rlp.witness->bottom);
        }
        res.rejected.push_back(std::move(f));
    }
    const auto qi = ctx.compose(q, i);
    auto mor = is_jfib_morphism(ctx, qi, x, y);
    if (!mor.ok) {
        Finding f{"composite-not-a-morphism", {{"leg", "q∘i"}}};
        if (mor.violation) {
            f.detail["generator"] = std::to_string(mor.violation->first);
            f.detail["attach"] = mor.violation->second;
        }
        res.rejected.push_back(std::move(f));
    }
    if (!res.rejected.empty()) return res;

    JFibObject<Ctx> z;
    z.carrier = ctx.dom(q);
    z.generators = J;
    for (int j = 0; j < static_cast<int>(J.size()); ++j)
        for (const auto& k : ctx.hom(ctx.dom(J[j]), z.carrier)) {
            if (auto k0 = ctx.factor_through_mono(i, k)) {
                const auto& xe = x.chooser.at(chooser_key(ctx, j, *k0));
                z.chooser[chooser_key(ctx, j, k)] = {k, ctx.compose(i, xe.ext)};
                ++res.through_mono;
            } else {
                const auto& ye = y.chooser.at(chooser_key(ctx, j, ctx.compose(q, k)));
                Square<Ctx> s{J[j], q, k, ye.ext};
                auto fs = enumerate_fillers(ctx, s);
                if (fs.empty())
                    throw Error("internal-consistency",
                                "a square over the verified fibration has no filler");
                z.chooser[chooser_key(ctx, j, k)] = {
                    k, pick == FillerPick::First ? fs.front() : fs.back()};
                ++res.over_fibration;
            }
        }

    if (!validate_jfib(ctx, z).empty() || !is_jfib_morphism(ctx, i, x, z).ok ||
        !is_jfib_morphism(ctx, q, z, y).ok)
        throw Error("internal-consistency", "constructed structure failed its postconditions");
    res.z = std::move(z);
    return res;
}

template <class Ctx>
struct FreeJfibResult {
    SoaResult<Ctx> soa;
    std::optional<JFibObject<Ctx>> fib; // present iff the factorisation completed
};

// Fibrant replacement: factor X -> 1 and read the recorded fillers back as a
// chooser on the middle object.
template <class Ctx>
FreeJfibResult<Ctx> free_jfib_replacement(const Ctx& ctx, const typename Ctx::Object& x,
                                          const std::vector<typename Ctx::Map>& J,
                                          int max_rounds) {
    FreeJfibResult<Ctx> res;
    res.soa = soa_factorize(ctx, ctx.to_terminal(x), J, max_rounds);
    if (!res.soa.completed) return res;
    JFibObject<Ctx> fib;
    fib.carrier = ctx.dom(res.soa.right);
    fib.generators = J;
    for (const auto& [key, e] : res.soa.table.table)
        fib.chooser[{std::get<0>(key), std::get<1>(key)}] = {e.a, e.filler};
    res.fib = std::move(fib);
    return res;
}

} // namespace awfslab
