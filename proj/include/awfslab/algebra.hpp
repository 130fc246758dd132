#pragma once
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "awfslab/error.hpp"
#include "awfslab/lifting.hpp"

namespace awfslab {

// A total choice of fillers for every lifting problem (j, a, b) over the
// carrier, j ranging over the generating set. Problems are keyed by the
// generator index and the canonical forms of top and bottom, making table
// equality decidable and enumeration order irrelevant.
template <class Ctx>
struct LiftingFunction {
    struct Entry {
        typename Ctx::Map a, b, filler;
    };
    using Key = std::tuple<int, std::string, std::string>;

    typename Ctx::Map carrier;
    std::vector<typename Ctx::Map> generators;
    std::map<Key, Entry> table;
};

template <class Ctx>
typename LiftingFunction<Ctx>::Key problem_key(const Ctx& ctx, int j, const typename Ctx::Map& a,
                                               const typename Ctx::Map& b) {
    return {j, ctx.canon(a), ctx.canon(b)};
}

template <class Ctx>
struct LiftingProblem {
    int j;
    typename Ctx::Map a, b;
};

// Every commuting square over g with left leg in J, in deterministic order
// (generator index, then top, then bottom in hom order).
template <class Ctx>
std::vector<LiftingProblem<Ctx>> problems_over(const Ctx& ctx, const typename Ctx::Map& g,
                                               const std::vector<typename Ctx::Map>& J) {
    std::vector<LiftingProblem<Ctx>> out;
    for (int ji = 0; ji < static_cast<int>(J.size()); ++ji) {
        const auto& j = J[ji];
        const auto bottoms = ctx.hom(ctx.cod(j), ctx.cod(g));
        for (const auto& a : ctx.hom(ctx.dom(j), ctx.dom(g))) {
            const auto ga = ctx.compose(g, a);
            for (const auto& b : bottoms)
                if (ctx.equal(ga, ctx.compose(b, j))) out.push_back({ji, a, b});
        }
    }
    return out;
}

template <class Ctx>
struct MakeLfResult {
    std::optional<LiftingFunction<Ctx>> lf; // present iff every problem is solvable
    std::optional<Square<Ctx>> witness;     // first unsolvable square otherwise
};

// Record the lexicographically first filler for every problem over g.
template <class Ctx>
MakeLfResult<Ctx> make_lifting_function(const Ctx& ctx, const typename Ctx::Map& g,
                                        const std::vector<typename Ctx::Map>& J) {
    LiftingFunction<Ctx> lf;
    lf.carrier = g;
    lf.generators = J;
    for (const auto& p : problems_over(ctx, g, J)) {
        Square<Ctx> s{J[p.j], g, p.a, p.b};
        auto fs = enumerate_fillers(ctx, s, 1);
        if (fs.empty()) return {std::nullopt, std::move(s)};
        lf.table[problem_key(ctx, p.j, p.a, p.b)] = {p.a, p.b, std::move(fs[0])};
    }
    return {std::move(lf), std::nullopt};
}

// Totality and validity re-verification; findings are data.
template <class Ctx>
std::vector<Finding> verify_lifting_function(const Ctx& ctx, const LiftingFunction<Ctx>& lf) {
    std::vector<Finding> out;
    std::map<typename LiftingFunction<Ctx>::Key, bool> expected;
    for (const auto& p : problems_over(ctx, lf.carrier, lf.generators))
        expected[problem_key(ctx, p.j, p.a, p.b)] = true;
    for (const auto& [key, _] : expected)
        if (!lf.table.count(key))
            out.push_back({"missing-entry",
                           {{"generator", std::to_string(std::get<0>(key))},
                            {"top", std::get<1>(key)},
                            {"bottom", std::get<2>(key)}}});
    for (const auto& [key, e] : lf.table) {
        const int j = std::get<0>(key);
        if (!expected.count(key)) {
            out.push_back({"extraneous-entry", {{"generator", std::to_string(j)}}});
            continue;
        }
        Square<Ctx> s{lf.generators[j], lf.carrier, e.a, e.b};
        if (square_defect(ctx, s)) {
            out.push_back({"entry-square-invalid", {{"generator", std::to_string(j)}}});
            continue;
        }
        if (!is_filler(ctx, s, e.filler))
            out.push_back({"entry-not-a-filler",
                           {{"generator", std::to_string(j)},
                            {"top", std::get<1>(key)},
                            {"bottom", std::get<2>(key)}}});
    }
    return out;
}

template <class Ctx>
struct MorphismReport {
    bool ok = true;
    std::optional<typename LiftingFunction<Ctx>::Key> violation; // first failing problem of lf1
};

// (u, v) : carrier(lf1) -> carrier(lf2) preserves chosen fillers:
// u ∘ φ1(j,a,b) = φ2(j, u∘a, v∘b) for every problem over carrier(lf1).
template <class Ctx>
MorphismReport<Ctx> is_algebra_morphism(const Ctx& ctx, const typename Ctx::Map& u,
                                        const typename Ctx::Map& v, const LiftingFunction<Ctx>& lf1,
                                        const LiftingFunction<Ctx>& lf2) {
    if (!ctx.equal(ctx.compose(lf2.carrier, u), ctx.compose(v, lf1.carrier)))
        throw Error("algebra-square", "the comparison square does not commute");
    MorphismReport<Ctx> rep;
    for (const auto& [key, e] : lf1.table) {
        const int j = std::get<0>(key);
        const auto ua = ctx.compose(u, e.a);
        const auto vb = ctx.compose(v, e.b);
        auto it = lf2.table.find(problem_key(ctx, j, ua, vb));
        if (it == lf2.table.end() ||
            !ctx.equal(ctx.compose(u, e.filler), it->second.filler)) {
            rep.ok = false;
            rep.violation = key;
            return rep;
        }
    }
    return rep;
}

// Two-step composite structure on g∘f: lift the bottom through φ_g, then the
// result through φ_f.
template <class Ctx>
LiftingFunction<Ctx> vertical_compose(const Ctx& ctx, const LiftingFunction<Ctx>& phi_f,
                                      const LiftingFunction<Ctx>& phi_g) {
    if (!(ctx.cod(phi_f.carrier) == ctx.dom(phi_g.carrier)))
        throw Error("compose-mismatch", "vertical composition needs composable carriers");
    if (phi_f.generators.size() != phi_g.generators.size())
        throw Error("generator-mismatch", "vertical composition needs a shared generating set");
    for (std::size_t k = 0; k < phi_f.generators.size(); ++k)
        if (!ctx.equal(phi_f.generators[k], phi_g.generators[k]))
            throw Error("generator-mismatch", "vertical composition needs a shared generating set");

    LiftingFunction<Ctx> out;
    out.carrier = ctx.compose(phi_g.carrier, phi_f.carrier);
    out.generators = phi_f.generators;
    for (const auto& p : problems_over(ctx, out.carrier, out.generators)) {
        const auto fa = ctx.compose(phi_f.carrier, p.a);
        const auto& mid = phi_g.table.at(problem_key(ctx, p.j, fa, p.b)).filler;
        const auto& res = phi_f.table.at(problem_key(ctx, p.j, p.a, mid)).filler;
        out.table[problem_key(ctx, p.j, p.a, p.b)] = {p.a, p.b, res};
    }
    return out;
}

// ---- bounded small object argument --------------------------------------

template <class Ctx>
struct SoaAttachment {
    int round = 0;
    int index = 0; // position within the round's canonically sorted problems
    int j = 0;
    typename Ctx::Map a, b;          // the attached problem, a into the E of its round
    std::vector<std::string> added;  // cells created by this attachment
};

template <class Ctx>
struct SoaResult {
    bool completed = false;
    typename Ctx::Map left;  // X -> E, a relative cell complex
    typename Ctx::Map right; // E -> Y with r∘l = f
    LiftingFunction<Ctx> table; // on `right`; partial when !completed
    std::vector<std::size_t> outstanding; // unfilled problems after each round
    std::vector<SoaAttachment<Ctx>> cells;
    int rounds_run = 0;
};

namespace soa_detail {

template <class Ctx>
struct SoaState {
    typename Ctx::Map left, right;
    std::vector<typename Ctx::Map> generators;
    std::map<typename LiftingFunction<Ctx>::Key, typename LiftingFunction<Ctx>::Entry> table;
};

template <class Ctx>
struct RoundPieces {
    typename Ctx::Map tr;          // base coprojection E -> E'
    typename Ctx::Map from_right;  // attached side, ⊔B' -> E'
    std::vector<std::string> prefixes;              // per attachment
    std::vector<typename Ctx::Object> renamed_cod;  // per attachment, its B'
};

// One round as a single cell attachment: push the coproduct of the renamed
// generators out along the copairing of the tops, then transport the state
// once along the base coprojection. Fills in each attachment's `added` list
// by bucketing the new cells on their name prefix.
template <class Ctx>
RoundPieces<Ctx> attach_round(const Ctx& ctx, SoaState<Ctx>& st, int round,
                              std::vector<SoaAttachment<Ctx>>& batch) {
    RoundPieces<Ctx> out;
    std::vector<typename Ctx::Map> jts, ats, bts;
    jts.reserve(batch.size());
    ats.reserve(batch.size());
    bts.reserve(batch.size());
    for (const auto& c : batch) {
        const std::string prefix =
            "r" + std::to_string(round) + ".p" + std::to_string(c.index) + ".";
        auto jp = ctx.prefix_domain(ctx.prefix_codomain(st.generators[c.j], prefix), prefix);
        out.prefixes.push_back(prefix);
        out.renamed_cod.push_back(ctx.cod(jp));
        jts.push_back(std::move(jp));
        ats.push_back(ctx.prefix_domain(c.a, prefix));
        bts.push_back(ctx.prefix_domain(c.b, prefix));
    }
    auto po = ctx.pushout(ctx.sum(jts), ctx.copair(ats));
    auto new_right = ctx.induced(po, ctx.copair(bts), st.right);
    if (!new_right) throw Error("pushout-cocone", "cell attachment cocone does not commute");

    // transport everything already built along the base coprojection E -> E'
    const auto& tr = po.from_base;
    st.left = ctx.compose(tr, st.left);
    st.right = std::move(*new_right);
    std::map<typename LiftingFunction<Ctx>::Key, typename LiftingFunction<Ctx>::Entry> moved;
    for (auto& [key, e] : st.table) {
        typename LiftingFunction<Ctx>::Entry ne{ctx.compose(tr, e.a), e.b,
                                                ctx.compose(tr, e.filler)};
        moved[problem_key(ctx, std::get<0>(key), ne.a, ne.b)] = std::move(ne);
    }
    st.table = std::move(moved);

    std::set<std::string> hit;
    for (const auto& [_, img] : ctx.cell_assignment(tr)) hit.insert(img);
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < batch.size(); ++i) slot[out.prefixes[i]] = i;
    for (const auto& cell : ctx.cells(ctx.cod(tr))) {
        if (hit.count(cell)) continue;
        const auto name = cell.substr(cell.find(':') + 1);
        auto d = name.find('.');
        if (d != std::string::npos) d = name.find('.', d + 1);
        auto it = d == std::string::npos ? slot.end() : slot.find(name.substr(0, d + 1));
        if (it == slot.end())
            throw Error("internal-consistency", "pushout cell outside this round's attachments");
        batch[it->second].added.push_back(cell);
    }

    out.tr = std::move(po.from_base);
    out.from_right = std::move(po.from_right);
    return out;
}

// The chosen filler for an attached problem is the attached-side coprojection
// restricted to that problem's renamed generator codomain.
template <class Ctx>
void record_round_fillers(const Ctx& ctx, SoaState<Ctx>& st,
                          const std::vector<SoaAttachment<Ctx>>& batch,
                          const RoundPieces<Ctx>& rp) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto rename =
            ctx.prefix_codomain(ctx.identity(ctx.cod(st.generators[batch[i].j])), rp.prefixes[i]);
        const auto into = ctx.include_into(rp.renamed_cod[i], ctx.dom(rp.from_right));
        auto filler = ctx.compose(rp.from_right, ctx.compose(into, rename));
        auto a_now = ctx.compose(rp.tr, batch[i].a);
        auto key = problem_key(ctx, batch[i].j, a_now, batch[i].b);
        st.table[std::move(key)] = {std::move(a_now), batch[i].b, std::move(filler)};
    }
}

// Streaming count of problems without a table entry. Every table entry and
// every problem in `attached_extra` is itself a commuting square over the
// current right leg, so the count is the number of commuting squares minus
// both; no per-candidate key needs to be built.
template <class Ctx>
std::size_t count_unfilled(const Ctx& ctx, const SoaState<Ctx>& st, std::size_t attached_extra) {
    std::size_t pairs = 0;
    for (int ji = 0; ji < static_cast<int>(st.generators.size()); ++ji) {
        const auto& j = st.generators[ji];
        std::map<std::string, std::size_t> by_composite; // canon(b∘j) -> multiplicity
        std::size_t nb = 0;
        for (const auto& b : ctx.hom(ctx.cod(j), ctx.cod(st.right))) {
            ++by_composite[ctx.canon(ctx.compose(b, j))];
            ++nb;
        }
        if (nb == 0) continue;
        if (by_composite.size() == 1 &&
            static_cast<std::size_t>(ctx.hom(ctx.dom(j), ctx.cod(st.right)).size()) == 1) {
            // a single possible composite: every top commutes with every bottom
            std::size_t tops = 0;
            ctx.for_each_hom_unordered(ctx.dom(j), ctx.dom(st.right),
                                       [&](const typename Ctx::Map&) {
                                           ++tops;
                                           return true;
                                       });
            pairs += tops * nb;
            continue;
        }
        ctx.for_each_hom_unordered(ctx.dom(j), ctx.dom(st.right),
                                   [&](const typename Ctx::Map& a) {
                                       auto it = by_composite.find(ctx.canon_composed(st.right, a));
                                       if (it != by_composite.end()) pairs += it->second;
                                       return true;
                                   });
    }
    const std::size_t filled = st.table.size() + attached_extra;
    if (pairs < filled)
        throw Error("internal-consistency", "more recorded fillers than lifting problems");
    return pairs - filled;
}

} // namespace soa_detail

// Rounds: a scan pass records lexicographically first fillers for the
// problems over f that already have one; afterwards each round attaches every
// problem still lacking a recorded filler — all of them as one pushout of the
// coproduct of their renamed generators — and records the coprojection
// fillers. Problems are keyed by (generator, top, bottom); a key is never
// re-attached. After the last round the leftover problems are only counted,
// and that round's fillers are materialised only when nothing is left; a run
// stopped by the budget keeps the partial table of the earlier rounds.
template <class Ctx>
SoaResult<Ctx> soa_factorize(const Ctx& ctx, const typename Ctx::Map& f,
                             const std::vector<typename Ctx::Map>& J, int max_rounds) {
    soa_detail::SoaState<Ctx> st{ctx.identity(ctx.dom(f)), f, J, {}};
    SoaResult<Ctx> res;

    auto unfilled = [&]() {
        std::vector<LiftingProblem<Ctx>> probs;
        std::vector<std::pair<typename LiftingFunction<Ctx>::Key, std::size_t>> order;
        for (auto& p : problems_over(ctx, st.right, st.generators)) {
            auto key = problem_key(ctx, p.j, p.a, p.b);
            if (st.table.count(key)) continue;
            order.emplace_back(std::move(key), probs.size());
            probs.push_back(std::move(p));
        }
        std::sort(order.begin(), order.end());
        std::vector<LiftingProblem<Ctx>> out;
        out.reserve(order.size());
        for (auto& [_, i] : order) out.push_back(std::move(probs[i]));
        return out;
    };

    // round 0: record what is already solvable
    for (const auto& p : unfilled()) {
        Square<Ctx> s{st.generators[p.j], st.right, p.a, p.b};
        auto fs = enumerate_fillers(ctx, s, 1);
        if (!fs.empty())
            st.table[problem_key(ctx, p.j, p.a, p.b)] = {p.a, p.b, std::move(fs[0])};
    }
    auto pending = unfilled();
    res.outstanding.push_back(pending.size());

    for (int round = 1; round <= max_rounds && !pending.empty(); ++round) {
        res.rounds_run = round;
        std::vector<SoaAttachment<Ctx>> batch;
        batch.reserve(pending.size());
        int idx = 0;
        for (auto& p : pending)
            batch.push_back({round, idx++, p.j, std::move(p.a), std::move(p.b), {}});
        pending.clear();

        auto rp = soa_detail::attach_round(ctx, st, round, batch);
        if (round < max_rounds) {
            soa_detail::record_round_fillers(ctx, st, batch, rp);
            pending = unfilled();
            res.outstanding.push_back(pending.size());
        } else {
            // budget boundary: count what the next round would attach instead
            // of materialising it; the batch just filled is excluded by size
            const std::size_t left_over = soa_detail::count_unfilled(ctx, st, batch.size());
            res.outstanding.push_back(left_over);
            if (left_over == 0) soa_detail::record_round_fillers(ctx, st, batch, rp);
        }
        for (auto& c : batch) res.cells.push_back(std::move(c));
    }

    res.completed = res.outstanding.back() == 0;
    res.left = st.left;
    res.right = st.right;
    res.table.carrier = st.right;
    res.table.generators = st.generators;
    res.table.table = std::move(st.table);
    return res;
}

// Re-run the recorded attachments of a cell record against the same input,
// one pushout per recorded round; used to check that the record determines
// the factorisation. No lifting table is carried.
template <class Ctx>
SoaResult<Ctx> soa_replay(const Ctx& ctx, const typename Ctx::Map& f,
                          const std::vector<typename Ctx::Map>& J,
                          const std::vector<SoaAttachment<Ctx>>& cells) {
    soa_detail::SoaState<Ctx> st{ctx.identity(ctx.dom(f)), f, J, {}};
    SoaResult<Ctx> res;
    std::size_t i = 0;
    while (i < cells.size()) {
        const int round = cells[i].round;
        std::vector<SoaAttachment<Ctx>> batch;
        while (i < cells.size() && cells[i].round == round) {
            batch.push_back(cells[i]);
            batch.back().added.clear();
            ++i;
        }
        res.rounds_run = round;
        soa_detail::attach_round(ctx, st, round, batch);
        for (auto& c : batch) res.cells.push_back(std::move(c));
    }
    res.left = st.left;
    res.right = st.right;
    res.completed = true;
    return res;
}

// ---- freeness of the factorisation's right structure --------------------

template <class Ctx>
struct FreeAlgebraCandidate {
    LiftingFunction<Ctx> phi;  // structure on some g' : X' -> Y'
    typename Ctx::Map u, v;    // comparison square f -> g'
};

template <class Ctx>
struct MediatorReport {
    bool ok = true;                 // candidate square valid against f
    std::vector<typename Ctx::Map> mediators;
    bool exists() const { return !mediators.empty(); }
    bool unique() const { return mediators.size() == 1; }
};

// For the universal structure (l : X -> E, r with table φ on E -> Y) and a
// candidate algebra with comparison square (u, v), search every w : E -> X'
// with w∘l = u and carrier compatibility for which (w, v) preserves fillers.
// Freeness predicts exactly one.
template <class Ctx>
MediatorReport<Ctx> check_free_algebra(const Ctx& ctx, const typename Ctx::Map& l,
                                       const LiftingFunction<Ctx>& r,
                                       const FreeAlgebraCandidate<Ctx>& cand) {
    MediatorReport<Ctx> rep;
    const auto f = ctx.compose(r.carrier, l);
    if (!ctx.equal(ctx.compose(cand.phi.carrier, cand.u), ctx.compose(cand.v, f))) {
        rep.ok = false;
        return rep;
    }
    const auto vr = ctx.compose(cand.v, r.carrier);
    for (const auto& w : ctx.hom(ctx.dom(r.carrier), ctx.dom(cand.phi.carrier))) {
        if (!ctx.equal(ctx.compose(w, l), cand.u)) continue;
        if (!ctx.equal(ctx.compose(cand.phi.carrier, w), vr)) continue;
        if (!is_algebra_morphism(ctx, w, cand.v, r, cand.phi).ok) continue;
        rep.mediators.push_back(w);
    }
    return rep;
}

} // namespace awfslab
