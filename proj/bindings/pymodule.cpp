// Python surface: every function takes and returns canonical JSON text, so the
// bindings stay schema-identical with the command-line reports.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "awfslab/catgph.hpp"
#include "awfslab/cli.hpp"
#include "awfslab/instance_io.hpp"
#include "awfslab/jfib.hpp"

namespace py = pybind11;
using namespace awfslab;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

std::string findings_report(const std::vector<Finding>& findings, const std::string& kind) {
    Json rep;
    rep["kind"] = kind;
    Json fs = Json::array();
    for (const auto& f : findings) {
        Json e{{"kind", f.kind}};
        for (const auto& [k, v] : f.detail) e[k] = v;
        fs.push_back(e);
    }
    rep["findings"] = fs;
    rep["status"] = findings.empty() ? "pass" : "fail";
    return canonical_text(rep);
}

template <class Io>
std::string factorize_typed(const Json& fj, const Json& gj, int max_rounds) {
    typename Io::Ctx ctx;
    const auto f = typed_from_json<typename Io::Map>(fj, "map");
    std::vector<typename Io::Map> J;
    for (const auto& g : gj) J.push_back(typed_from_json<typename Io::Map>(g, "gen"));
    const auto res = soa_factorize(ctx, f, J, max_rounds);
    Json rep;
    rep["completed"] = res.completed;
    rep["rounds_run"] = res.rounds_run;
    rep["outstanding"] = res.outstanding;
    rep["left"] = to_json(res.left);
    rep["right"] = to_json(res.right);
    rep["table_entries"] = res.table.table.size();
    rep["status"] = res.completed ? "pass" : "budget";
    return canonical_text(rep);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "algebraic lifting toolkit: JSON-text bindings over the C++ core";
    m.attr("__version__") = kToolVersion;

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            const CliResult r = dispatch(args);
            return py::make_tuple(r.exit_code, canonical_text(r.report));
        },
        py::arg("args"),
        "Route a full command-line argument vector; returns (exit_code, report_text).");

    m.def(
        "validate",
        [](const std::string& text) {
            const Instance inst = instance_from_json(parse(text));
            return findings_report(validate_instance(inst), instance_kind(inst));
        },
        py::arg("instance_text"),
        "Structural validation of a serialized object or map; returns a findings report.");

    m.def(
        "factorize",
        [](const std::string& map_text, const std::string& gens_text, int max_rounds) {
            const Json fj = parse(map_text);
            const Json gj = parse(gens_text);
            if (!gj.is_array()) throw Error("schema", "gens: expected a JSON array of maps");
            const std::string kind = json_kind(fj);
            if (kind == "graph_map") return factorize_typed<GphIo>(fj, gj, max_rounds);
            if (kind == "ss_map") return factorize_typed<SSIo>(fj, gj, max_rounds);
            throw Error("unsupported-space",
                        "the factorisation step needs pushouts; use graph_map or ss_map");
        },
        py::arg("map_text"), py::arg("gens_text"), py::arg("max_rounds") = 5,
        "Factor a map as a cell attachment followed by a structured right leg.");

    m.def(
        "comonad_laws",
        [](const std::string& cat_text) {
            const auto c = typed_from_json<FiniteCategory>(parse(cat_text), "cat");
            const auto r = comonad_verify(c);
            Json laws = Json::array();
            for (const auto& l : r.laws)
                laws.push_back({{"law", l.law}, {"pass", l.pass}, {"witness", l.witness}});
            return canonical_text(
                Json{{"laws", laws}, {"status", r.all_pass ? "pass" : "fail"}});
        },
        py::arg("category_text"),
        "Check the replacement comonad laws on a finite category.");

    m.def(
        "counterexample",
        [](int probe_nodes, int probe_edges) {
            const auto r = codiagonal_counterexample(probe_nodes, probe_edges);
            return canonical_text(Json{{"pi0_dom", r.pi0_dom},
                                       {"pi0_cod", r.pi0_cod},
                                       {"weq", r.weq},
                                       {"probe_holds", r.probe.holds},
                                       {"squares_checked", r.probe.squares_checked},
                                       {"probes_checked", r.probe.probes_checked},
                                       {"conclusion", r.conclusion},
                                       {"status", "pass"}});
        },
        py::arg("probe_nodes") = 4, py::arg("probe_edges") = 4,
        "Exhibit the two-point collapse as a non-equivalence with full lifting.");

    m.def(
        "rmap_iff_section",
        [](const std::string& functor_text) {
            const auto f = typed_from_json<Functor>(parse(functor_text), "functor");
            const auto r = rmap_iff_section(f);
            return canonical_text(Json{{"agree", r.agree},
                                       {"structure_exists", r.structure_exists},
                                       {"section_exists", r.section_exists},
                                       {"structure_count", r.structure_count},
                                       {"section_count", r.section_count},
                                       {"status", r.agree ? "pass" : "fail"}});
        },
        py::arg("functor_text"),
        "Compare lifting structures with sections of the underlying graph map.");
}
