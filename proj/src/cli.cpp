#include "awfslab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>

#include "awfslab/algebra.hpp"
#include "awfslab/catgph.hpp"
#include "awfslab/error.hpp"
#include "awfslab/instance_io.hpp"
#include "awfslab/jfib.hpp"
#include "awfslab/lifting.hpp"

namespace awfslab {

const char* kToolVersion = "0.1.0";

namespace {

// ---------------------------------------------------------------- arguments

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
};

Args parse_args(const std::vector<std::string>& argv, std::size_t start) {
    Args a;
    for (std::size_t i = start; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s.rfind("--", 0) == 0) {
            if (i + 1 >= argv.size())
                throw Error("missing-value", "flag " + s + " expects a value");
            a.flags[s.substr(2)] = argv[++i];
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

void check_flags(const Args& a, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    ok.insert("seed");
    for (const auto& [k, _] : a.flags)
        if (!ok.count(k)) throw Error("unknown-flag", "--" + k);
    if (!a.positional.empty())
        throw Error("unknown-argument", a.positional.front());
}

std::string need_flag(const Args& a, const std::string& name) {
    auto it = a.flags.find(name);
    if (it == a.flags.end()) throw Error("missing-flag", "required flag --" + name);
    return it->second;
}

std::optional<std::string> opt_flag(const Args& a, const std::string& name) {
    auto it = a.flags.find(name);
    if (it == a.flags.end()) return std::nullopt;
    return it->second;
}

long long int_flag(const Args& a, const std::string& name, long long dflt) {
    auto v = opt_flag(a, name);
    if (!v) return dflt;
    try {
        std::size_t pos = 0;
        const long long n = std::stoll(*v, &pos);
        if (pos != v->size() || n < 0) throw std::invalid_argument("trailing");
        return n;
    } catch (const std::exception&) {
        throw Error("bad-number", "--" + name + " expects a nonnegative integer, got " + *v);
    }
}

std::uint64_t resolve_seed(const Args& a) {
    std::string text = "0";
    if (auto v = opt_flag(a, "seed"))
        text = *v;
    else if (const char* env = std::getenv("AWFSLAB_SEED"))
        text = env;
    try {
        std::size_t pos = 0;
        const unsigned long long n = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing");
        return n;
    } catch (const std::exception&) {
        throw Error("bad-number", "seed expects a nonnegative integer, got " + text);
    }
}

// ---------------------------------------------------------------- reports

int exit_for(const std::string& status) {
    if (status == "pass") return 0;
    if (status == "fail") return 1;
    if (status == "budget") return 3;
    return 2;
}

Json finding_list(const std::vector<Finding>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(to_json(f));
    return arr;
}

// ---------------------------------------------------------------- validate

void cmd_validate(const Args& a, Json& rep) {
    check_flags(a, {"in"});
    const Instance inst = instance_from_json(load_json_file(need_flag(a, "in")));
    const auto findings = validate_instance(inst);
    rep["kind"] = instance_kind(inst);
    rep["findings"] = finding_list(findings);
    rep["status"] = findings.empty() ? "pass" : "fail";
}

// ---------------------------------------------------------------- lift

template <class Io>
void run_lift(const Json& sq, std::size_t limit, Json& rep) {
    typename Io::Ctx ctx;
    const auto left = typed_from_json<typename Io::Map>(sq.at("left"), "left");
    const auto right = typed_from_json<typename Io::Map>(sq.at("right"), "right");
    const auto top = typed_from_json<typename Io::Map>(sq.at("top"), "top");
    const auto bottom = typed_from_json<typename Io::Map>(sq.at("bottom"), "bottom");
    const auto square = make_square(ctx, left, right, top, bottom);
    const auto fillers = enumerate_fillers(ctx, square, limit);
    Json arr = Json::array();
    for (const auto& d : fillers) arr.push_back(to_json(d));
    rep["space"] = Io::space;
    rep["count"] = fillers.size();
    rep["fillers"] = arr;
    rep["status"] = fillers.empty() ? "fail" : "pass";
}

void cmd_lift(const Args& a, Json& rep) {
    check_flags(a, {"square", "limit"});
    const Json sq = load_json_file(need_flag(a, "square"));
    if (!sq.is_object() || json_kind(sq) != "square")
        throw Error("schema", "expected a square file with kind \"square\"");
    for (const char* leg : {"left", "right", "top", "bottom"})
        if (!sq.contains(leg)) throw Error("schema", std::string("square: missing ") + leg);
    const auto limit = static_cast<std::size_t>(int_flag(a, "limit", 1 << 20));
    const std::string kind = json_kind(sq.at("left"));
    if (kind == "graph_map")
        run_lift<GphIo>(sq, limit, rep);
    else if (kind == "functor")
        run_lift<CatIo>(sq, limit, rep);
    else if (kind == "ss_map")
        run_lift<SSIo>(sq, limit, rep);
    else
        throw Error("schema", "square legs must be graph_map, functor or ss_map");
}

// ---------------------------------------------------------------- rlp

template <class Io>
void run_rlp(const typename Io::Map& f, const std::vector<typename Io::Map>& gens, Json& rep) {
    typename Io::Ctx ctx;
    const auto r = has_rlp(ctx, f, gens);
    rep["holds"] = r.holds;
    rep["squares_checked"] = r.squares_checked;
    if (r.witness) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (ctx.equal(gens[i], r.witness->left)) idx = i;
        rep["witness"] = {{"left_index", idx},
                          {"top", to_json(r.witness->top)},
                          {"bottom", to_json(r.witness->bottom)}};
    }
    rep["status"] = r.holds ? "pass" : "fail";
}

void cmd_rlp(const Args& a, Json& rep) {
    check_flags(a, {"map", "against", "probe-nodes", "probe-edges"});
    const Json fj = load_json_file(need_flag(a, "map"));
    const std::string kind = json_kind(fj);
    const std::string against = need_flag(a, "against");
    if (against == "probe-monos") {
        if (kind != "graph_map")
            throw Error("unsupported-space", "the generated inclusion family probes graph maps");
        const auto f = typed_from_json<GraphMap>(fj, "map");
        const int pn = static_cast<int>(int_flag(a, "probe-nodes", 4));
        const int pe = static_cast<int>(int_flag(a, "probe-edges", 4));
        const auto r = rlp_probe_gph(f, pn, pe);
        rep["holds"] = r.holds;
        rep["probe_nodes"] = r.max_nodes;
        rep["probe_edges"] = r.max_edges;
        rep["probes_checked"] = r.probes_checked;
        rep["squares_checked"] = r.squares_checked;
        if (r.witness)
            rep["witness"] = {{"left", to_json(r.witness->left)},
                              {"top", to_json(r.witness->top)},
                              {"bottom", to_json(r.witness->bottom)}};
        rep["status"] = r.holds ? "pass" : "fail";
        return;
    }
    if (kind == "graph_map")
        run_rlp<GphIo>(typed_from_json<GraphMap>(fj, "map"),
                       load_map_list<GraphMap>(against, "against"), rep);
    else if (kind == "functor")
        run_rlp<CatIo>(typed_from_json<Functor>(fj, "map"),
                       load_map_list<Functor>(against, "against"), rep);
    else if (kind == "ss_map")
        run_rlp<SSIo>(typed_from_json<SSMap>(fj, "map"), load_map_list<SSMap>(against, "against"),
                      rep);
    else
        throw Error("schema", "--map must be graph_map, functor or ss_map");
}

// ---------------------------------------------------------------- factorize

template <class Io>
Json table_to_json(const LiftingFunction<typename Io::Ctx>& lf) {
    Json arr = Json::array();
    for (const auto& [key, e] : lf.table)
        arr.push_back({{"j", std::get<0>(key)},
                       {"a", to_json(e.a)},
                       {"b", to_json(e.b)},
                       {"filler", to_json(e.filler)}});
    return arr;
}

template <class Io>
void run_factorize(const typename Io::Map& f, const std::vector<typename Io::Map>& gens,
                   int max_rounds, const std::optional<std::string>& out, Json& rep) {
    typename Io::Ctx ctx;
    const auto res = soa_factorize(ctx, f, gens, max_rounds);
    rep["space"] = Io::space;
    rep["completed"] = res.completed;
    rep["rounds_run"] = res.rounds_run;
    rep["outstanding"] = res.outstanding;
    rep["cells"] = res.cells.size();
    rep["table_entries"] = res.table.table.size();
    rep["composite_matches"] = ctx.equal(ctx.compose(res.right, res.left), f);
    if (out) {
        write_json_file(*out + ".left.json", to_json(res.left));
        write_json_file(*out + ".right.json", to_json(res.right));
        write_json_file(*out + ".table.json", table_to_json<Io>(res.table));
    }
    rep["status"] = res.completed ? "pass" : "budget";
}

void cmd_factorize(const Args& a, Json& rep) {
    check_flags(a, {"map", "gen", "max-rounds", "out"});
    const Json fj = load_json_file(need_flag(a, "map"));
    const std::string kind = json_kind(fj);
    const int rounds = static_cast<int>(int_flag(a, "max-rounds", 5));
    const auto out = opt_flag(a, "out");
    const std::string gen = need_flag(a, "gen");
    if (kind == "graph_map")
        run_factorize<GphIo>(typed_from_json<GraphMap>(fj, "map"),
                             load_map_list<GraphMap>(gen, "gen"), rounds, out, rep);
    else if (kind == "ss_map")
        run_factorize<SSIo>(typed_from_json<SSMap>(fj, "map"), load_map_list<SSMap>(gen, "gen"),
                            rounds, out, rep);
    else
        throw Error("unsupported-space",
                    "the factorisation step needs pushouts; use graph_map or ss_map");
}

// ---------------------------------------------------------------- jfib

template <class Io>
void run_jfib_validate(const Json& j, Json& rep) {
    typename Io::Ctx ctx;
    const auto x = jfib_from_json<Io>(j, "in");
    const auto findings = validate_jfib(ctx, x);
    rep["space"] = Io::space;
    rep["findings"] = finding_list(findings);
    rep["status"] = findings.empty() ? "pass" : "fail";
}

template <class Io>
void require_valid_jfib(const typename Io::Ctx& ctx, const JFibObject<typename Io::Ctx>& x,
                        const char* role) {
    const auto findings = validate_jfib(ctx, x);
    if (!findings.empty())
        throw Error("invalid-input", std::string(role) + ": " + findings.front().kind);
}

template <class Io>
void run_jfib_morphism(const Json& fj, const Json& xj, const Json& yj, Json& rep) {
    typename Io::Ctx ctx;
    const auto f = typed_from_json<typename Io::Map>(fj, "map");
    const auto x = jfib_from_json<Io>(xj, "dom");
    const auto y = jfib_from_json<Io>(yj, "cod");
    require_valid_jfib<Io>(ctx, x, "dom");
    require_valid_jfib<Io>(ctx, y, "cod");
    const auto r = is_jfib_morphism(ctx, f, x, y);
    rep["space"] = Io::space;
    rep["preserves"] = r.ok;
    if (r.violation)
        rep["violation"] = {{"generator", r.violation->first}, {"attach", r.violation->second}};
    rep["status"] = r.ok ? "pass" : "fail";
}

template <class Io>
void run_jfib_extend(const Json& xj, const Json& yj, const Json& ij, const Json& qj,
                     FillerPick pick, const std::optional<std::string>& out, Json& rep) {
    typename Io::Ctx ctx;
    const auto x = jfib_from_json<Io>(xj, "dom");
    const auto y = jfib_from_json<Io>(yj, "cod");
    require_valid_jfib<Io>(ctx, x, "dom");
    require_valid_jfib<Io>(ctx, y, "cod");
    const auto i = typed_from_json<typename Io::Map>(ij, "i");
    const auto q = typed_from_json<typename Io::Map>(qj, "q");
    const auto res = lemma62_extend(ctx, x, y, i, q, pick);
    rep["space"] = Io::space;
    if (!res.rejected.empty()) {
        rep["findings"] = finding_list(res.rejected);
        rep["status"] = "fail";
        return;
    }
    rep["through_mono"] = res.through_mono;
    rep["over_fibration"] = res.over_fibration;
    const Json zj = jfib_to_json<Io>(*res.z);
    rep["result"] = zj;
    if (out) write_json_file(*out, zj);
    rep["status"] = "pass";
}

template <class Io>
void run_jfib_replace(const Json& oj, const std::string& gen, int max_rounds,
                      const std::optional<std::string>& out, Json& rep) {
    typename Io::Ctx ctx;
    const auto x = typed_from_json<typename Io::Obj>(oj, "in");
    const auto gens = load_map_list<typename Io::Map>(gen, "gen");
    const auto res = free_jfib_replacement(ctx, x, gens, max_rounds);
    rep["space"] = Io::space;
    rep["completed"] = res.soa.completed;
    rep["rounds_run"] = res.soa.rounds_run;
    rep["outstanding"] = res.soa.outstanding;
    rep["cells"] = res.soa.cells.size();
    if (res.fib) {
        const Json fj = jfib_to_json<Io>(*res.fib);
        rep["result"] = fj;
        if (out) write_json_file(*out, fj);
    }
    rep["status"] = res.soa.completed ? "pass" : "budget";
}

void cmd_jfib(const std::string& sub, const Args& a, Json& rep) {
    if (sub == "validate") {
        check_flags(a, {"in"});
        const Json j = load_json_file(need_flag(a, "in"));
        const std::string space = j.is_object() && j.contains("space") && j.at("space").is_string()
                                      ? j.at("space").get<std::string>()
                                      : "";
        if (space == "graph")
            run_jfib_validate<GphIo>(j, rep);
        else if (space == "category")
            run_jfib_validate<CatIo>(j, rep);
        else if (space == "ssset")
            run_jfib_validate<SSIo>(j, rep);
        else
            throw Error("schema", "jfib files carry a space of graph, category or ssset");
        return;
    }
    if (sub == "morphism") {
        check_flags(a, {"map", "dom", "cod"});
        const Json fj = load_json_file(need_flag(a, "map"));
        const Json xj = load_json_file(need_flag(a, "dom"));
        const Json yj = load_json_file(need_flag(a, "cod"));
        const std::string kind = json_kind(fj);
        if (kind == "graph_map")
            run_jfib_morphism<GphIo>(fj, xj, yj, rep);
        else if (kind == "functor")
            run_jfib_morphism<CatIo>(fj, xj, yj, rep);
        else if (kind == "ss_map")
            run_jfib_morphism<SSIo>(fj, xj, yj, rep);
        else
            throw Error("schema", "--map must be graph_map, functor or ss_map");
        return;
    }
    if (sub == "extend") {
        check_flags(a, {"dom", "cod", "i", "q", "pick", "out"});
        const Json xj = load_json_file(need_flag(a, "dom"));
        const Json yj = load_json_file(need_flag(a, "cod"));
        const Json ij = load_json_file(need_flag(a, "i"));
        const Json qj = load_json_file(need_flag(a, "q"));
        FillerPick pick = FillerPick::First;
        if (auto p = opt_flag(a, "pick")) {
            if (*p == "last")
                pick = FillerPick::Last;
            else if (*p != "first")
                throw Error("bad-flag", "--pick expects first or last");
        }
        const auto out = opt_flag(a, "out");
        const std::string kind = json_kind(ij);
        if (kind == "graph_map")
            run_jfib_extend<GphIo>(xj, yj, ij, qj, pick, out, rep);
        else if (kind == "functor")
            run_jfib_extend<CatIo>(xj, yj, ij, qj, pick, out, rep);
        else if (kind == "ss_map")
            run_jfib_extend<SSIo>(xj, yj, ij, qj, pick, out, rep);
        else
            throw Error("schema", "--i must be graph_map, functor or ss_map");
        return;
    }
    if (sub == "replace") {
        check_flags(a, {"in", "gen", "max-rounds", "out"});
        const Json oj = load_json_file(need_flag(a, "in"));
        const std::string kind = json_kind(oj);
        const int rounds = static_cast<int>(int_flag(a, "max-rounds", 5));
        const auto out = opt_flag(a, "out");
        if (kind == "graph")
            run_jfib_replace<GphIo>(oj, need_flag(a, "gen"), rounds, out, rep);
        else if (kind == "ssset")
            run_jfib_replace<SSIo>(oj, need_flag(a, "gen"), rounds, out, rep);
        else
            throw Error("unsupported-space",
                        "the replacement step needs pushouts; use graph or ssset");
        return;
    }
    throw Error("unknown-subcommand", "jfib " + sub);
}

// ---------------------------------------------------------------- catgph

void cmd_catgph(const std::string& sub, const Args& a, Json& rep) {
    if (sub == "comonad-laws") {
        check_flags(a, {"cat"});
        const auto x = load_typed<FiniteCategory>(need_flag(a, "cat"), "cat");
        const auto r = comonad_verify(x);
        Json laws = Json::array();
        for (const auto& e : r.laws) {
            Json entry = {{"law", e.law}, {"status", e.pass ? "pass" : "fail"}};
            if (!e.pass) entry["witness"] = e.witness;
            laws.push_back(entry);
        }
        rep["laws"] = laws;
        rep["status"] = r.all_pass ? "pass" : "fail";
        return;
    }
    if (sub == "counterexample") {
        check_flags(a, {"probe-nodes", "probe-edges"});
        const int pn = static_cast<int>(int_flag(a, "probe-nodes", 4));
        const int pe = static_cast<int>(int_flag(a, "probe-edges", 4));
        const auto r = codiagonal_counterexample(pn, pe);
        const bool pi0_ok = r.pi0_dom == 2 && r.pi0_cod == 1 && !r.weq;
        const bool shortcut_ok = r.shortcut.applies && r.shortcut.holds;
        Json checks = Json::array();
        checks.push_back({{"check", "pi0-components"},
                          {"status", pi0_ok ? "pass" : "fail"},
                          {"dom", r.pi0_dom},
                          {"cod", r.pi0_cod},
                          {"weak_equivalence", r.weq}});
        checks.push_back({{"check", "structural-reduction"},
                          {"status", shortcut_ok ? "pass" : "fail"},
                          {"applies", r.shortcut.applies},
                          {"holds", r.shortcut.holds}});
        checks.push_back({{"check", "probe-rlp"},
                          {"status", r.probe.holds ? "pass" : "fail"},
                          {"probe_nodes", r.probe.max_nodes},
                          {"probe_edges", r.probe.max_edges},
                          {"probes_checked", r.probe.probes_checked},
                          {"squares_checked", r.probe.squares_checked}});
        rep["checks"] = checks;
        rep["conclusion"] = r.conclusion;
        rep["status"] = (pi0_ok && shortcut_ok && r.probe.holds) ? "pass" : "fail";
        return;
    }
    if (sub == "rmap-iff-section") {
        check_flags(a, {"functor"});
        const auto f = load_typed<Functor>(need_flag(a, "functor"), "functor");
        const auto r = rmap_iff_section(f);
        rep["check"] = "rmap-iff-section";
        rep["structure_exists"] = r.structure_exists;
        rep["section_exists"] = r.section_exists;
        rep["structure_count"] = r.structure_count;
        rep["section_count"] = r.section_count;
        rep["structure_cap"] = r.structure_cap;
        rep["status"] = r.agree ? "pass" : "fail";
        return;
    }
    if (sub == "free-rmap") {
        check_flags(a, {"g", "rstruct"});
        const auto g = load_typed<Functor>(need_flag(a, "g"), "g");
        const auto r = rmap_from_json(load_json_file(need_flag(a, "rstruct")));
        const auto cert = free_rmap_mediator(g, r);
        rep["mediator"] = to_json(cert.gbar);
        rep["square_candidates"] = cert.square_candidates;
        rep["morphism_candidates"] = cert.morphism_candidates;
        rep["unique"] = cert.unique;
        rep["status"] = (cert.square_ok && cert.morphism_ok && cert.unique) ? "pass" : "fail";
        return;
    }
    if (sub == "f-cof-probe") {
        check_flags(a, {"probe-nodes", "probe-edges"});
        const int pn = static_cast<int>(int_flag(a, "probe-nodes", 2));
        const int pe = static_cast<int>(int_flag(a, "probe-edges", 2));
        const auto r = f_preserves_cofibrations_probe(pn, pe);
        rep["check"] = "free-functor-on-inclusions";
        rep["probe_nodes"] = r.probe_nodes;
        rep["probe_edges"] = r.probe_edges;
        rep["monos_checked"] = r.monos_checked;
        rep["rights_checked"] = r.rights_checked;
        rep["squares_checked"] = r.squares_checked;
        if (!r.all_pass) rep["witness"] = r.witness;
        rep["status"] = r.all_pass ? "pass" : "fail";
        return;
    }
    throw Error("unknown-subcommand", "catgph " + sub);
}

// ---------------------------------------------------------------- corpus

void cmd_corpus(const Args& a, Json& rep) {
    check_flags(a, {"manifest"});
    const std::string path = need_flag(a, "manifest");
    const Json m = load_json_file(path);
    if (!m.is_object() || !m.contains("entries") || !m.at("entries").is_array())
        throw Error("schema", "manifest: expected an object with an entries array");
    const std::string root =
        std::filesystem::absolute(std::filesystem::path(path)).parent_path().string();

    Json entries = Json::array();
    std::size_t matched = 0;
    for (const auto& e : m.at("entries")) {
        if (!e.is_object() || !e.contains("name") || !e.contains("args") ||
            !e.at("args").is_array())
            throw Error("schema", "manifest entries need name and args");
        const std::string name = e.at("name").get<std::string>();
        const std::string expect = e.contains("expect") ? e.at("expect").get<std::string>() : "pass";
        std::vector<std::string> args;
        for (const auto& s : e.at("args")) {
            std::string v = s.get<std::string>();
            for (std::size_t pos; (pos = v.find("{root}")) != std::string::npos;)
                v.replace(pos, 6, root);
            args.push_back(v);
        }
        const CliResult sub = dispatch(args);
        const std::string status = sub.report.value("status", "error");
        const bool match = status == expect;
        matched += match;
        entries.push_back({{"name", name},
                           {"expect", expect},
                           {"actual", status},
                           {"exit_code", sub.exit_code},
                           {"match", match}});
    }
    rep["entries"] = entries;
    rep["total"] = entries.size();
    rep["matched"] = matched;
    rep["status"] = matched == entries.size() ? "pass" : "fail";
}

} // namespace

CliResult dispatch(const std::vector<std::string>& args) {
    Json rep;
    rep["tool"] = "awfslab";
    rep["version"] = kToolVersion;
    rep["command"] = args;
    try {
        if (args.empty())
            throw Error("usage",
                        "expected a subcommand: validate, lift, rlp, factorize, jfib, catgph, "
                        "corpus");
        const std::string& cmd = args[0];
        const bool nested = cmd == "jfib" || cmd == "catgph";
        if (nested && args.size() < 2)
            throw Error("usage", cmd + " expects a subcommand");
        const Args a = parse_args(args, nested ? 2 : 1);
        rep["seed"] = resolve_seed(a);

        if (cmd == "validate")
            cmd_validate(a, rep);
        else if (cmd == "lift")
            cmd_lift(a, rep);
        else if (cmd == "rlp")
            cmd_rlp(a, rep);
        else if (cmd == "factorize")
            cmd_factorize(a, rep);
        else if (cmd == "jfib")
            cmd_jfib(args[1], a, rep);
        else if (cmd == "catgph")
            cmd_catgph(args[1], a, rep);
        else if (cmd == "corpus")
            cmd_corpus(a, rep);
        else
            throw Error("unknown-subcommand", cmd);
        return {exit_for(rep.value("status", "error")), rep};
    } catch (const Error& e) {
        rep["status"] = "error";
        rep["error"] = {{"code", e.code()}, {"message", e.what()}};
        return {2, rep};
    } catch (const Json::exception& e) {
        rep["status"] = "error";
        rep["error"] = {{"code", "schema"}, {"message", e.what()}};
        return {2, rep};
    } catch (const std::exception& e) {
        rep["status"] = "error";
        rep["error"] = {{"code", "internal"}, {"message", e.what()}};
        return {2, rep};
    }
}

} // namespace awfslab
