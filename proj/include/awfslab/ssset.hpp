#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awfslab/graph.hpp"

namespace awfslab {

// Semi-simplicial set truncated at a dimension bound: face maps only, no
// degeneracies. faces[m][c] lists d_0(c) .. d_m(c) for an m-cell c (m >= 1).
struct SemiSimplicialSet {
    int dim = 0;
    std::vector<std::vector<std::string>> cells;                     // per dimension, sorted
    std::vector<std::map<std::string, std::vector<std::string>>> faces;

    bool operator==(const SemiSimplicialSet&) const = default;

    bool has_cell(int m, const std::string& id) const;
    void sort();
};

struct SSMap {
    SemiSimplicialSet dom;
    SemiSimplicialSet cod;
    std::vector<std::map<std::string, std::string>> level_map;

    bool operator==(const SSMap&) const = default;
};

// Validation includes the simplicial identity d_i d_j = d_{j-1} d_i (i < j).
std::vector<Finding> validate_ssset(const SemiSimplicialSet& x);
std::vector<Finding> validate_ss_map(const SSMap& f);

SSMap identity_ss_map(const SemiSimplicialSet& x);
SSMap compose(const SSMap& g, const SSMap& f);
bool is_mono(const SSMap& f);

constexpr int kMaxSimplexDim = 9; // single-digit vertex encoding

// Standard m-simplex: cells are strictly increasing digit strings over 0..m.
SemiSimplicialSet standard_simplex(int m);
// Horn: the simplex minus its top cell and the k-th face of the top cell.
SemiSimplicialSet horn(int m, int k);
SSMap horn_inclusion(int m, int k);
// One cell per dimension up to the bound; every face map collapses.
SemiSimplicialSet terminal_ssset(int dim);
std::optional<SSMap> unique_map_to_terminal(const SemiSimplicialSet& x, int dim);

std::vector<SSMap> hom_ss_maps(const SemiSimplicialSet& dom, const SemiSimplicialSet& cod);

// Streaming enumeration; chooses top-dimensional cells first and forces their
// faces, so large codomains are not swept vertex-by-vertex. Order differs from
// hom_ss_maps and is unspecified. The callback borrows a reused buffer;
// return false to stop early (the function then also returns false).
bool for_each_ss_hom_unordered(const SemiSimplicialSet& dom, const SemiSimplicialSet& cod,
                               const std::function<bool(const SSMap&)>& fn);

// n-ary disjoint union; callers guarantee name-disjointness (overlap throws).
SemiSimplicialSet disjoint_union_sssets(const std::vector<SemiSimplicialSet>& xs);
// [f_1, ..., f_n] : ⊔dom(f_i) -> shared codomain.
SSMap copair_ss_maps(const std::vector<SSMap>& fs);
// ⊔f_i : ⊔dom(f_i) -> ⊔cod(f_i).
SSMap sum_ss_maps(const std::vector<SSMap>& fs);
// Identity-assignment inclusion of a subcomplex into a larger one.
SSMap include_ss_map(const SemiSimplicialSet& sub, const SemiSimplicialSet& whole);

struct SSPushout {
    SemiSimplicialSet object;
    SSMap from_right;
    SSMap from_base;
};

SSPushout pushout_ssset(const SSMap& i, const SSMap& a);
std::optional<SSMap> pushout_induced(const SSPushout& po, const SSMap& u, const SSMap& v);

// Renaming support for deterministic cell attachment (see graph.hpp twins).
SemiSimplicialSet prefix_names(const SemiSimplicialSet& x, const std::string& prefix);
SSMap prefix_cod(const SSMap& m, const std::string& prefix);
SSMap prefix_dom(const SSMap& m, const std::string& prefix);

struct SSCtx {
    using Object = SemiSimplicialSet;
    using Map = SSMap;

    std::vector<Map> hom(const Object& a, const Object& x) const { return hom_ss_maps(a, x); }
    // Enumeration order unspecified; the callback borrows a reused buffer.
    template <class F>
    bool for_each_hom_unordered(const Object& a, const Object& x, F&& fn) const {
        return for_each_ss_hom_unordered(a, x, std::function<bool(const Map&)>(std::forward<F>(fn)));
    }
    Map compose(const Map& g, const Map& f) const { return awfslab::compose(g, f); }
    Map identity(const Object& x) const { return identity_ss_map(x); }
    bool equal(const Map& f, const Map& g) const { return f == g; }
    const Object& dom(const Map& f) const { return f.dom; }
    const Object& cod(const Map& f) const { return f.cod; }
    bool valid(const Map& f) const { return validate_ss_map(f).empty(); }
    bool mono(const Map& f) const { return is_mono(f); }
    std::string canon(const Map& f) const;
    std::string name() const { return "ssset"; }

    std::optional<Map> factor_through_mono(const Map& i, const Map& k) const;

    using Pushout = SSPushout;
    Pushout pushout(const Map& i, const Map& a) const { return pushout_ssset(i, a); }
    std::optional<Map> induced(const Pushout& po, const Map& u, const Map& v) const {
        return pushout_induced(po, u, v);
    }
    Object prefix_object(const Object& x, const std::string& p) const {
        return prefix_names(x, p);
    }
    Map prefix_codomain(const Map& m, const std::string& p) const { return prefix_cod(m, p); }
    Map prefix_domain(const Map& m, const std::string& p) const { return prefix_dom(m, p); }
    Object coproduct(const std::vector<Object>& xs) const { return disjoint_union_sssets(xs); }
    Map copair(const std::vector<Map>& fs) const { return copair_ss_maps(fs); }
    Map sum(const std::vector<Map>& fs) const { return sum_ss_maps(fs); }
    Map include_into(const Object& sub, const Object& whole) const {
        return include_ss_map(sub, whole);
    }
    // canon(compose(g, f)) without materialising the composite.
    std::string canon_composed(const Map& g, const Map& f) const;
    std::vector<std::string> cells(const Object& x) const {
        std::vector<std::string> out;
        for (int m = 0; m <= x.dim; ++m)
            for (const auto& c : x.cells[m]) out.push_back(std::to_string(m) + ":" + c);
        return out;
    }
    std::map<std::string, std::string> cell_assignment(const Map& f) const {
        std::map<std::string, std::string> out;
        for (std::size_t d = 0; d < f.level_map.size(); ++d)
            for (const auto& [k, v] : f.level_map[d])
                out[std::to_string(d) + ":" + k] = std::to_string(d) + ":" + v;
        return out;
    }
    Object terminal(const Object& like) const { return terminal_ssset(like.dim); }
    Map to_terminal(const Object& x) const { return *unique_map_to_terminal(x, x.dim); }
};

} // namespace awfslab
