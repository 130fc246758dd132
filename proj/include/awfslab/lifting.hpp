#pragma once
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "awfslab/category.hpp"
#include "awfslab/error.hpp"
#include "awfslab/graph.hpp"
#include "awfslab/ssset.hpp"

namespace awfslab {

// A lifting problem: a commuting square with left leg i : A -> B and right
// leg f : X -> Y; `top` runs A -> X and `bottom` runs B -> Y.
template <class Ctx>
struct Square {
    typename Ctx::Map left, right, top, bottom;
};

// Reason the four maps fail to form a commuting square, if any.
template <class Ctx>
std::optional<Finding> square_defect(const Ctx& ctx, const Square<Ctx>& s) {
    if (!ctx.valid(s.left)) return Finding{"invalid-map", {{"leg", "left"}}};
    if (!ctx.valid(s.right)) return Finding{"invalid-map", {{"leg", "right"}}};
    if (!ctx.valid(s.top)) return Finding{"invalid-map", {{"leg", "top"}}};
    if (!ctx.valid(s.bottom)) return Finding{"invalid-map", {{"leg", "bottom"}}};
    if (!(ctx.dom(s.left) == ctx.dom(s.top))) return Finding{"corner-mismatch", {{"corner", "A"}}};
    if (!(ctx.cod(s.left) == ctx.dom(s.bottom)))
        return Finding{"corner-mismatch", {{"corner", "B"}}};
    if (!(ctx.cod(s.top) == ctx.dom(s.right))) return Finding{"corner-mismatch", {{"corner", "X"}}};
    if (!(ctx.cod(s.right) == ctx.cod(s.bottom)))
        return Finding{"corner-mismatch", {{"corner", "Y"}}};
    if (!ctx.equal(ctx.compose(s.right, s.top), ctx.compose(s.bottom, s.left)))
        return Finding{"square-not-commuting", {}};
    return std::nullopt;
}

template <class Ctx>
Square<Ctx> make_square(const Ctx& ctx, typename Ctx::Map left, typename Ctx::Map right,
                        typename Ctx::Map top, typename Ctx::Map bottom) {
    Square<Ctx> s{std::move(left), std::move(right), std::move(top), std::move(bottom)};
    if (auto d = square_defect(ctx, s)) throw Error("square", d->kind);
    return s;
}

template <class Ctx>
bool is_filler(const Ctx& ctx, const Square<Ctx>& s, const typename Ctx::Map& d) {
    return ctx.equal(ctx.compose(d, s.left), s.top) &&
           ctx.equal(ctx.compose(s.right, d), s.bottom);
}

// All diagonal fillers d : B -> X, in the hom-enumeration (lexicographic)
// order, truncated at `limit`. An empty result means no filler exists within
// the search space.
template <class Ctx>
std::vector<typename Ctx::Map> enumerate_fillers(
    const Ctx& ctx, const Square<Ctx>& s,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::vector<typename Ctx::Map> out;
    if (limit == 0) return out;
    for (auto& d : ctx.hom(ctx.cod(s.left), ctx.dom(s.right))) {
        if (!is_filler(ctx, s, d)) continue;
        out.push_back(std::move(d));
        if (out.size() >= limit) break;
    }
    return out;
}

template <class Ctx>
struct RlpReport {
    bool holds = true;
    std::optional<Square<Ctx>> witness; // first unsolvable square, if any
    std::size_t squares_checked = 0;
};

// Right lifting property of f against every map in I: every commuting square
// with left leg in I admits a filler. Tops are enumerated before bottoms so
// the first counterexample is canonical.
template <class Ctx>
RlpReport<Ctx> has_rlp(const Ctx& ctx, const typename Ctx::Map& f,
                       const std::vector<typename Ctx::Map>& I) {
    RlpReport<Ctx> rep;
    for (const auto& i : I) {
        const auto tops = ctx.hom(ctx.dom(i), ctx.dom(f));
        const auto bottoms = ctx.hom(ctx.cod(i), ctx.cod(f));
        for (const auto& a : tops) {
            const auto fa = ctx.compose(f, a);
            for (const auto& b : bottoms) {
                if (!ctx.equal(fa, ctx.compose(b, i))) continue;
                ++rep.squares_checked;
                Square<Ctx> s{i, f, a, b};
                if (enumerate_fillers(ctx, s, 1).empty()) {
                    rep.holds = false;
                    rep.witness = std::move(s);
                    return rep;
                }
            }
        }
    }
    return rep;
}

template <class Ctx>
bool is_j_fibration(const Ctx& ctx, const typename Ctx::Map& f,
                    const std::vector<typename Ctx::Map>& J) {
    return has_rlp(ctx, f, J).holds;
}

// Retract diagram exhibiting f as a retract of g in the arrow category:
//   sect = (s0 : dom f -> dom g, s1 : cod f -> cod g)
//   retr = (r0 : dom g -> dom f, r1 : cod g -> cod f)
// with r∘s = id on both levels and both squares commuting.
template <class Ctx>
struct RetractDiagram {
    typename Ctx::Map s0, s1, r0, r1;
};

template <class Ctx>
bool is_retract_of(const Ctx& ctx, const typename Ctx::Map& f, const typename Ctx::Map& g,
                   const RetractDiagram<Ctx>& d) {
    return ctx.equal(ctx.compose(d.r0, d.s0), ctx.identity(ctx.dom(f))) &&
           ctx.equal(ctx.compose(d.r1, d.s1), ctx.identity(ctx.cod(f))) &&
           ctx.equal(ctx.compose(g, d.s0), ctx.compose(d.s1, f)) &&
           ctx.equal(ctx.compose(f, d.r0), ctx.compose(d.r1, g));
}

// ---- Cat: the closed-form trivial-fibration test ------------------------

struct TrivialFibrationReport {
    bool holds = true;
    std::vector<Finding> findings; // which objects/morphisms lack preimages
};

// Full and surjective on objects.
TrivialFibrationReport is_trivial_fibration_cat(const Functor& F);

// ---- Gph: generated probe family for RLP against "all monos" ------------

// Canonical representatives (up to isomorphism = node permutation) of all
// directed multigraphs with at most max_nodes nodes and max_edges edges.
// Nodes are "n0".."nK", edges "e0".."eL" sorted by (src,tgt).
std::vector<FiniteGraph> canonical_graphs(int max_nodes, int max_edges);

// Every subgraph inclusion A ⊆ B: node subsets in bitmask order, then edge
// subsets (restricted to available endpoints) in bitmask order.
std::vector<GraphMap> subgraph_inclusions(const FiniteGraph& b);

struct ProbeReport {
    bool holds = true;
    int max_nodes = 0;
    int max_edges = 0;
    std::size_t probes_checked = 0;  // subgraph inclusions examined
    std::size_t squares_checked = 0; // commuting squares found and solved
    std::optional<Square<GphCtx>> witness;
};

// RLP of f against the generated family of monos within the probe bounds.
ProbeReport rlp_probe_gph(const GraphMap& f, int max_nodes, int max_edges);

} // namespace awfslab
