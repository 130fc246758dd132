#include "awfslab/ssset.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "awfslab/error.hpp"
#include "awfslab/quotient.hpp"
#include "json.hpp"

namespace awfslab {

bool SemiSimplicialSet::has_cell(int m, const std::string& id) const {
    if (m < 0 || m >= static_cast<int>(cells.size())) return false;
    return std::binary_search(cells[m].begin(), cells[m].end(), id);
}

void SemiSimplicialSet::sort() {
    cells.resize(dim + 1);
    faces.resize(dim + 1);
    for (auto& level : cells) std::sort(level.begin(), level.end());
}

std::vector<Finding> validate_ssset(const SemiSimplicialSet& x) {
    std::vector<Finding> out;
    if (x.dim < 0 || static_cast<int>(x.cells.size()) != x.dim + 1 ||
        static_cast<int>(x.faces.size()) != x.dim + 1) {
        out.push_back({"level-shape", {}});
        return out;
    }
    for (int m = 0; m <= x.dim; ++m) {
        std::set<std::string> seen(x.cells[m].begin(), x.cells[m].end());
        if (seen.size() != x.cells[m].size())
            out.push_back({"duplicate-cell", {{"dim", std::to_string(m)}}});
    }
    for (int m = 1; m <= x.dim; ++m) {
        for (const auto& c : x.cells[m]) {
            auto it = x.faces[m].find(c);
            if (it == x.faces[m].end()) {
                out.push_back({"faces-missing", {{"cell", c}, {"dim", std::to_string(m)}}});
                continue;
            }
            if (static_cast<int>(it->second.size()) != m + 1) {
                out.push_back({"face-count", {{"cell", c}, {"dim", std::to_string(m)}}});
                continue;
            }
            for (const auto& f : it->second)
                if (!x.has_cell(m - 1, f))
                    out.push_back({"face-missing-cell", {{"cell", c}, {"face", f}}});
        }
        for (const auto& [c, _] : x.faces[m])
            if (!x.has_cell(m, c))
                out.push_back({"faces-extraneous", {{"cell", c}, {"dim", std::to_string(m)}}});
    }
    if (!out.empty()) return out;
    // d_i d_j = d_{j-1} d_i for i < j
    for (int m = 2; m <= x.dim; ++m)
        for (const auto& c : x.cells[m]) {
            const auto& fc = x.faces[m].at(c);
            for (int j = 1; j <= m; ++j)
                for (int i = 0; i < j; ++i) {
                    const auto& left = x.faces[m - 1].at(fc[j])[i];
                    const auto& right = x.faces[m - 1].at(fc[i])[j - 1];
                    if (left != right)
                        out.push_back({"simplicial-identity",
                                       {{"cell", c},
                                        {"i", std::to_string(i)},
                                        {"j", std::to_string(j)}}});
                }
        }
    return out;
}

std::vector<Finding> validate_ss_map(const SSMap& f) {
    std::vector<Finding> out;
    if (static_cast<int>(f.level_map.size()) != f.dom.dim + 1) {
        out.push_back({"level-shape", {}});
        return out;
    }
    for (int m = 0; m <= f.dom.dim; ++m) {
        for (const auto& c : f.dom.cells[m]) {
            auto it = f.level_map[m].find(c);
            if (it == f.level_map[m].end()) {
                out.push_back({"cell-unmapped", {{"cell", c}, {"dim", std::to_string(m)}}});
                continue;
            }
            if (!f.cod.has_cell(m, it->second)) {
                out.push_back({"cell-image-missing", {{"cell", c}, {"dim", std::to_string(m)}}});
                continue;
            }
        }
        for (const auto& [c, _] : f.level_map[m])
            if (!f.dom.has_cell(m, c))
                out.push_back({"cell-extraneous", {{"cell", c}, {"dim", std::to_string(m)}}});
    }
    if (!out.empty()) return out;
    for (int m = 1; m <= f.dom.dim; ++m)
        for (const auto& c : f.dom.cells[m]) {
            const auto& img = f.level_map[m].at(c);
            for (int i = 0; i <= m; ++i) {
                const auto& lhs = f.cod.faces[m].at(img)[i];
                const auto& rhs = f.level_map[m - 1].at(f.dom.faces[m].at(c)[i]);
                if (lhs != rhs)
                    out.push_back({"face-mismatch",
                                   {{"cell", c}, {"dim", std::to_string(m)}, {"i", std::to_string(i)}}});
            }
        }
    return out;
}

SSMap identity_ss_map(const SemiSimplicialSet& x) {
    SSMap f;
    f.dom = x;
    f.cod = x;
    f.level_map.resize(x.dim + 1);
    for (int m = 0; m <= x.dim; ++m)
        for (const auto& c : x.cells[m]) f.level_map[m][c] = c;
    return f;
}

SSMap compose(const SSMap& g, const SSMap& f) {
    if (!(f.cod == g.dom)) throw Error("compose-mismatch", "ss map composition: cod(f) != dom(g)");
    SSMap h;
    h.dom = f.dom;
    h.cod = g.cod;
    h.level_map.resize(f.dom.dim + 1);
    for (int m = 0; m <= f.dom.dim; ++m)
        for (const auto& [c, img] : f.level_map[m]) h.level_map[m][c] = g.level_map[m].at(img);
    return h;
}

bool is_mono(const SSMap& f) {
    for (const auto& level : f.level_map) {
        std::set<std::string> img;
        for (const auto& [_, v] : level)
            if (!img.insert(v).second) return false;
    }
    return true;
}

namespace {

std::vector<std::string> increasing_strings(int m, int size) {
    std::vector<std::string> out;
    std::function<void(int, std::string)> rec = [&](int next, std::string acc) {
        if (static_cast<int>(acc.size()) == size) {
            out.push_back(acc);
            return;
        }
        for (int v = next; v <= m; ++v) rec(v + 1, acc + std::to_string(v));
    };
    rec(0, "");
    return out;
}

std::string drop_char(const std::string& s, int i) {
    std::string t = s;
    t.erase(t.begin() + i);
    return t;
}

} // namespace

SemiSimplicialSet standard_simplex(int m) {
    if (m < 0 || m > kMaxSimplexDim) throw Error("bad-bound", "simplex dimension out of range");
    SemiSimplicialSet x;
    x.dim = m;
    x.cells.resize(m + 1);
    x.faces.resize(m + 1);
    for (int d = 0; d <= m; ++d) {
        x.cells[d] = increasing_strings(m, d + 1);
        if (d >= 1)
            for (const auto& c : x.cells[d]) {
                std::vector<std::string> fs;
                for (int i = 0; i <= d; ++i) fs.push_back(drop_char(c, i));
                x.faces[d][c] = fs;
            }
    }
    x.sort();
    return x;
}

SemiSimplicialSet horn(int m, int k) {
    if (m < 1 || m > kMaxSimplexDim || k < 0 || k > m)
        throw Error("bad-bound", "horn index out of range");
    SemiSimplicialSet s = standard_simplex(m);
    std::string top = s.cells[m][0];
    std::string missing = drop_char(top, k);
    SemiSimplicialSet x = s;
    x.cells[m].clear();
    x.faces[m].clear();
    auto& lvl = x.cells[m - 1];
    lvl.erase(std::remove(lvl.begin(), lvl.end(), missing), lvl.end());
    if (m - 1 >= 1) x.faces[m - 1].erase(missing);
    return x;
}

SSMap horn_inclusion(int m, int k) {
    SSMap f;
    f.dom = horn(m, k);
    f.cod = standard_simplex(m);
    f.level_map.resize(f.dom.dim + 1);
    for (int d = 0; d <= f.dom.dim; ++d)
        for (const auto& c : f.dom.cells[d]) f.level_map[d][c] = c;
    return f;
}

SemiSimplicialSet terminal_ssset(int dim) {
    SemiSimplicialSet x;
    x.dim = dim;
    x.cells.resize(dim + 1);
    x.faces.resize(dim + 1);
    for (int m = 0; m <= dim; ++m) {
        x.cells[m] = {"pt"};
        if (m >= 1) x.faces[m]["pt"] = std::vector<std::string>(m + 1, "pt");
    }
    return x;
}

std::optional<SSMap> unique_map_to_terminal(const SemiSimplicialSet& x, int dim) {
    if (x.dim > dim)
        for (int m = dim + 1; m <= x.dim; ++m)
            if (!x.cells[m].empty()) return std::nullopt;
    SSMap f;
    f.dom = x;
    f.cod = terminal_ssset(dim);
    f.level_map.resize(x.dim + 1);
    for (int m = 0; m <= x.dim && m <= dim; ++m)
        for (const auto& c : x.cells[m]) f.level_map[m][c] = "pt";
    return f;
}

std::vector<SSMap> hom_ss_maps(const SemiSimplicialSet& dom, const SemiSimplicialSet& cod) {
    std::vector<SSMap> out;
    const int top = dom.dim;
    if (cod.dim < top)
        for (int m = cod.dim + 1; m <= top; ++m)
            if (!dom.cells[m].empty()) return out;

    std::vector<std::map<std::string, std::string>> assign(top + 1);

    std::function<void(int)> level_rec = [&](int m) {
        if (m > top) {
            SSMap f;
            f.dom = dom;
            f.cod = cod;
            f.level_map = assign;
            out.push_back(std::move(f));
            return;
        }
        // candidates per cell at level m, constrained by faces already mapped
        std::vector<std::vector<std::string>> cands(dom.cells[m].size());
        for (std::size_t ci = 0; ci < dom.cells[m].size(); ++ci) {
            const auto& c = dom.cells[m][ci];
            for (const auto& target : cod.cells[m]) {
                bool ok = true;
                if (m >= 1) {
                    const auto& df = dom.faces[m].at(c);
                    const auto& tf = cod.faces[m].at(target);
                    for (int i = 0; i <= m && ok; ++i)
                        if (tf[i] != assign[m - 1].at(df[i])) ok = false;
                }
                if (ok) cands[ci].push_back(target);
            }
            if (cands[ci].empty()) return;
        }
        std::vector<std::size_t> pick(dom.cells[m].size(), 0);
        while (true) {
            for (std::size_t ci = 0; ci < dom.cells[m].size(); ++ci)
                assign[m][dom.cells[m][ci]] = cands[ci][pick[ci]];
            level_rec(m + 1);
            std::size_t i = dom.cells[m].size();
            bool advanced = false;
            while (i > 0) {
                --i;
                if (++pick[i] < cands[i].size()) {
                    advanced = true;
                    break;
                }
                pick[i] = 0;
            }
            if (!advanced) break;
        }
        assign[m].clear();
    };

    level_rec(0);
    return out;
}

bool for_each_ss_hom_unordered(const SemiSimplicialSet& dom, const SemiSimplicialSet& cod,
                               const std::function<bool(const SSMap&)>& fn) {
    const int top = dom.dim;
    if (cod.dim < top)
        for (int m = cod.dim + 1; m <= top; ++m)
            if (!dom.cells[m].empty()) return true; // empty hom set, not a stop

    SSMap buf;
    buf.dom = dom;
    buf.cod = cod;
    buf.level_map.assign(top + 1, {});

    // Top-dimensional cells first: assigning a cell forces all its faces, so
    // only cells reached before their cofaces are enumerated freely.
    std::vector<std::pair<int, std::string>> order;
    for (int m = top; m >= 0; --m)
        for (const auto& c : dom.cells[m]) order.emplace_back(m, c);

    std::vector<std::pair<int, std::string>> undo;
    std::function<bool(int, const std::string&, const std::string&)> force =
        [&](int m, const std::string& c, const std::string& img) -> bool {
        auto it = buf.level_map[m].find(c);
        if (it != buf.level_map[m].end()) return it->second == img;
        buf.level_map[m].emplace(c, img);
        undo.emplace_back(m, c);
        if (m == 0) return true;
        const auto& df = dom.faces[m].at(c);
        const auto& cf = cod.faces[m].at(img);
        for (int i = 0; i <= m; ++i)
            if (!force(m - 1, df[i], cf[i])) return false;
        return true;
    };

    bool go = true;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            if (!fn(buf)) go = false;
            return;
        }
        const auto& [m, c] = order[k];
        if (buf.level_map[m].count(c)) {
            rec(k + 1);
            return;
        }
        for (const auto& cand : cod.cells[m]) {
            const std::size_t mark = undo.size();
            if (force(m, c, cand)) rec(k + 1);
            while (undo.size() > mark) {
                buf.level_map[undo.back().first].erase(undo.back().second);
                undo.pop_back();
            }
            if (!go) return;
        }
    };
    rec(0);
    return go;
}

SemiSimplicialSet disjoint_union_sssets(const std::vector<SemiSimplicialSet>& xs) {
    SemiSimplicialSet out;
    for (const auto& x : xs) out.dim = std::max(out.dim, x.dim);
    out.cells.resize(out.dim + 1);
    out.faces.resize(out.dim + 1);
    std::vector<std::set<std::string>> names(out.dim + 1);
    for (const auto& x : xs)
        for (int m = 0; m <= x.dim; ++m) {
            for (const auto& c : x.cells[m])
                if (!names[m].insert(c).second)
                    throw Error("coproduct-overlap", "duplicate cell name in disjoint union: " + c);
            out.faces[m].insert(x.faces[m].begin(), x.faces[m].end());
        }
    for (int m = 0; m <= out.dim; ++m) out.cells[m].assign(names[m].begin(), names[m].end());
    return out;
}

SSMap copair_ss_maps(const std::vector<SSMap>& fs) {
    if (fs.empty()) throw Error("coproduct-empty", "copairing needs at least one map");
    SSMap out;
    std::vector<SemiSimplicialSet> doms;
    doms.reserve(fs.size());
    for (const auto& f : fs) {
        if (!(f.cod == fs.front().cod))
            throw Error("copair-mismatch", "copairing needs a shared codomain");
        doms.push_back(f.dom);
    }
    out.dom = disjoint_union_sssets(doms);
    out.cod = fs.front().cod;
    out.level_map.resize(out.dom.dim + 1);
    for (const auto& f : fs)
        for (std::size_t m = 0; m < f.level_map.size(); ++m)
            out.level_map[m].insert(f.level_map[m].begin(), f.level_map[m].end());
    return out;
}

SSMap sum_ss_maps(const std::vector<SSMap>& fs) {
    if (fs.empty()) throw Error("coproduct-empty", "a sum of maps needs at least one map");
    SSMap out;
    std::vector<SemiSimplicialSet> doms, cods;
    doms.reserve(fs.size());
    cods.reserve(fs.size());
    for (const auto& f : fs) {
        doms.push_back(f.dom);
        cods.push_back(f.cod);
    }
    out.dom = disjoint_union_sssets(doms);
    out.cod = disjoint_union_sssets(cods);
    out.level_map.resize(out.dom.dim + 1);
    for (const auto& f : fs)
        for (std::size_t m = 0; m < f.level_map.size(); ++m)
            out.level_map[m].insert(f.level_map[m].begin(), f.level_map[m].end());
    return out;
}

SSMap include_ss_map(const SemiSimplicialSet& sub, const SemiSimplicialSet& whole) {
    SSMap m;
    m.dom = sub;
    m.cod = whole;
    m.level_map.resize(sub.dim + 1);
    for (int d = 0; d <= sub.dim; ++d)
        for (const auto& c : sub.cells[d]) {
            if (!whole.has_cell(d, c)) throw Error("inclusion-mismatch", "cell not present: " + c);
            if (d >= 1 && sub.faces[d].at(c) != whole.faces[d].at(c))
                throw Error("inclusion-mismatch", "face mismatch at cell: " + c);
            m.level_map[d][c] = c;
        }
    return m;
}

SSPushout pushout_ssset(const SSMap& i, const SSMap& a) {
    if (!(i.dom == a.dom)) throw Error("pushout-span", "pushout legs must share their domain");
    const SemiSimplicialSet& A = i.dom;
    const SemiSimplicialSet& B = i.cod;
    const SemiSimplicialSet& X = a.cod;
    const int dim = std::max(B.dim, X.dim);

    SSPushout po;
    po.object.dim = dim;
    po.object.cells.resize(dim + 1);
    po.object.faces.resize(dim + 1);
    po.from_base.dom = X;
    po.from_right.dom = B;
    po.from_base.level_map.resize(X.dim + 1);
    po.from_right.level_map.resize(B.dim + 1);

    for (int m = 0; m <= dim; ++m) {
        std::vector<std::pair<bool, std::string>> items;
        if (m <= X.dim)
            for (const auto& c : X.cells[m]) items.emplace_back(false, c);
        if (m <= B.dim)
            for (const auto& c : B.cells[m]) items.emplace_back(true, c);
        PushoutQuotient q(std::move(items));
        if (m <= A.dim)
            for (const auto& c : A.cells[m])
                q.uf.unite(q.index(true, i.level_map[m].at(c)),
                           q.index(false, a.level_map[m].at(c)));
        std::set<std::string> base_names;
        if (m <= X.dim) base_names.insert(X.cells[m].begin(), X.cells[m].end());
        std::map<std::size_t, std::string> memo;
        std::set<std::string> cells;
        if (m <= X.dim)
            for (const auto& c : X.cells[m]) {
                auto r = q.repr(false, c, base_names, memo);
                po.from_base.level_map[m][c] = r;
                cells.insert(r);
            }
        if (m <= B.dim)
            for (const auto& c : B.cells[m]) {
                auto r = q.repr(true, c, base_names, memo);
                po.from_right.level_map[m][c] = r;
                cells.insert(r);
            }
        po.object.cells[m].assign(cells.begin(), cells.end());
    }
    for (int m = 1; m <= dim; ++m) {
        if (m <= X.dim)
            for (const auto& c : X.cells[m]) {
                std::vector<std::string> fs;
                for (const auto& f : X.faces[m].at(c))
                    fs.push_back(po.from_base.level_map[m - 1].at(f));
                po.object.faces[m][po.from_base.level_map[m].at(c)] = fs;
            }
        if (m <= B.dim)
            for (const auto& c : B.cells[m]) {
                std::vector<std::string> fs;
                for (const auto& f : B.faces[m].at(c))
                    fs.push_back(po.from_right.level_map[m - 1].at(f));
                po.object.faces[m][po.from_right.level_map[m].at(c)] = fs;
            }
    }
    po.from_base.cod = po.object;
    po.from_right.cod = po.object;
    return po;
}

std::optional<SSMap> pushout_induced(const SSPushout& po, const SSMap& u, const SSMap& v) {
    if (!(u.cod == v.cod)) return std::nullopt;
    SSMap m;
    m.dom = po.object;
    m.cod = u.cod;
    m.level_map.resize(po.object.dim + 1);
    auto feed = [&](const SSMap& proj, const SSMap& leg) -> bool {
        for (int d = 0; d < static_cast<int>(proj.level_map.size()); ++d)
            for (const auto& [c, p] : proj.level_map[d]) {
                const auto& val = leg.level_map[d].at(c);
                auto it = m.level_map[d].find(p);
                if (it == m.level_map[d].end())
                    m.level_map[d][p] = val;
                else if (it->second != val)
                    return false;
            }
        return true;
    };
    if (!feed(po.from_right, u)) return std::nullopt;
    if (!feed(po.from_base, v)) return std::nullopt;
    if (!validate_ss_map(m).empty()) return std::nullopt;
    return m;
}

SemiSimplicialSet prefix_names(const SemiSimplicialSet& x, const std::string& prefix) {
    SemiSimplicialSet out;
    out.dim = x.dim;
    out.cells.resize(x.dim + 1);
    out.faces.resize(x.dim + 1);
    for (int m = 0; m <= x.dim; ++m) {
        for (const auto& c : x.cells[m]) out.cells[m].push_back(prefix + c);
        for (const auto& [c, fs] : x.faces[m]) {
            std::vector<std::string> pf;
            for (const auto& f : fs) pf.push_back(prefix + f);
            out.faces[m][prefix + c] = pf;
        }
    }
    out.sort();
    return out;
}

SSMap prefix_cod(const SSMap& m, const std::string& prefix) {
    SSMap out;
    out.dom = m.dom;
    out.cod = prefix_names(m.cod, prefix);
    out.level_map.resize(m.level_map.size());
    for (std::size_t d = 0; d < m.level_map.size(); ++d)
        for (const auto& [c, img] : m.level_map[d]) out.level_map[d][c] = prefix + img;
    return out;
}

SSMap prefix_dom(const SSMap& m, const std::string& prefix) {
    SSMap out;
    out.dom = prefix_names(m.dom, prefix);
    out.cod = m.cod;
    out.level_map.resize(m.level_map.size());
    for (std::size_t d = 0; d < m.level_map.size(); ++d)
        for (const auto& [c, img] : m.level_map[d]) out.level_map[d][prefix + c] = img;
    return out;
}

std::optional<SSMap> SSCtx::factor_through_mono(const Map& i, const Map& k) const {
    if (!(i.cod == k.cod)) return std::nullopt;
    std::vector<std::map<std::string, std::string>> inv(i.level_map.size());
    for (std::size_t d = 0; d < i.level_map.size(); ++d)
        for (const auto& [c, img] : i.level_map[d])
            if (!inv[d].emplace(img, c).second) return std::nullopt;
    SSMap k0;
    k0.dom = k.dom;
    k0.cod = i.dom;
    k0.level_map.resize(k.level_map.size());
    for (std::size_t d = 0; d < k.level_map.size(); ++d)
        for (const auto& [c, img] : k.level_map[d]) {
            if (d >= inv.size()) return std::nullopt;
            auto it = inv[d].find(img);
            if (it == inv[d].end()) return std::nullopt;
            k0.level_map[d][c] = it->second;
        }
    return k0;
}

std::string SSCtx::canon(const Map& f) const {
    nlohmann::json levels = nlohmann::json::object();
    for (int m = 0; m < static_cast<int>(f.level_map.size()); ++m)
        levels[std::to_string(m)] = f.level_map[m];
    nlohmann::json j;
    j["level_map"] = levels;
    return j.dump();
}

std::string SSCtx::canon_composed(const Map& g, const Map& f) const {
    // shaped exactly like canon(compose(g, f)): dom.dim + 1 levels
    nlohmann::json levels = nlohmann::json::object();
    for (int m = 0; m <= f.dom.dim; ++m) {
        std::map<std::string, std::string> lm;
        for (const auto& [c, img] : f.level_map[m]) lm[c] = g.level_map[m].at(img);
        levels[std::to_string(m)] = lm;
    }
    nlohmann::json j;
    j["level_map"] = levels;
    return j.dump();
}

} // namespace awfslab
