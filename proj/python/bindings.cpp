#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgmatch/errors.hpp"
#include "sgmatch/fpt.hpp"
#include "sgmatch/generate.hpp"
#include "sgmatch/io.hpp"
#include "sgmatch/oracle.hpp"
#include "sgmatch/poly.hpp"
#include "sgmatch/reductions.hpp"
#include "sgmatch/restrict.hpp"

namespace py = pybind11;

namespace {

using namespace sgmatch;

EditMode edit_mode_of(const std::string& mode) {
    if (mode == "query") return EditMode::QueryOnly;
    if (mode == "labels") return EditMode::LabelsOnly;
    if (mode == "both") return EditMode::Both;
    throw ValidationError("unknown edit mode: " + mode);
}

InstanceShape shape_of(const std::string& shape) {
    if (shape == "general") return InstanceShape::General;
    if (shape == "dag") return InstanceShape::Dag;
    if (shape == "unit") return InstanceShape::UnitLabels;
    throw ValidationError("unknown shape: " + shape);
}

std::vector<std::string> label_tokens(const LabeledGraph& g, VertexId v) {
    std::vector<std::string> out;
    for (SymbolId s : g.label(v)) out.push_back(g.alphabet().token(s));
    return out;
}

const char* answer_name(FptAnswer a) {
    switch (a) {
        case FptAnswer::Yes: return "yes";
        case FptAnswer::No: return "no";
        default: return "probably-no";
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matching strings against walks in vertex-labeled graphs";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<WitnessError>(m, "WitnessError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<LabeledGraph>(m, "Graph")
        .def_static("parse", [](const std::string& text) { return parse_graph(text); },
                    py::arg("text"))
        .def("serialize", [](const LabeledGraph& g) { return serialize_graph(g); })
        .def_property_readonly("vertex_count", &LabeledGraph::vertex_count)
        .def_property_readonly("edge_count", &LabeledGraph::edge_count)
        .def_property_readonly("edges",
                               [](const LabeledGraph& g) { return g.edges(); })
        .def("unit_labels", &LabeledGraph::unit_labels)
        .def("label", &label_tokens, py::arg("vertex"))
        .def("alphabet", [](const LabeledGraph& g) { return g.alphabet().tokens(); })
        .def("__repr__", [](const LabeledGraph& g) {
            return "<Graph |V|=" + std::to_string(g.vertex_count()) +
                   " |E|=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<QueryString>(m, "Query")
        .def_static("parse",
                    [](const std::string& text, const LabeledGraph& g) {
                        return parse_query(text, g.alphabet());
                    },
                    py::arg("text"), py::arg("graph"))
        .def("serialize",
             [](const QueryString& q, const LabeledGraph& g) {
                 return serialize_query(q, g.alphabet());
             },
             py::arg("graph"))
        .def("tokens",
             [](const QueryString& q, const LabeledGraph& g) {
                 std::vector<std::string> out;
                 for (SymbolId s : q.symbols()) out.push_back(g.alphabet().token(s));
                 return out;
             },
             py::arg("graph"))
        .def("__len__", &QueryString::size);

    py::class_<MatchWitness>(m, "Witness")
        .def_property_readonly("walk", [](const MatchWitness& w) { return w.walk; })
        .def_property_readonly("cost", &MatchWitness::cost)
        .def_property_readonly("graph_edit_count",
                               [](const MatchWitness& w) { return w.graph_edits.size(); })
        .def_property_readonly("query_edit_count",
                               [](const MatchWitness& w) { return w.query_edits.size(); })
        .def("to_json",
             [](const MatchWitness& w, const LabeledGraph& g) { return witness_to_json(w, g); },
             py::arg("graph"))
        .def_static("from_json",
                    [](const std::string& text, const LabeledGraph& g) {
                        return witness_from_json(text, g);
                    },
                    py::arg("text"), py::arg("graph"))
        .def("verify",
             [](const MatchWitness& w, const LabeledGraph& g, const QueryString& q) {
                 return verify_witness(g, q, w);
             },
             py::arg("graph"), py::arg("query"));

    py::class_<FptResult>(m, "CompatResult")
        .def_property_readonly("answer",
                               [](const FptResult& r) { return std::string(answer_name(r.answer)); })
        .def_property_readonly("trials", [](const FptResult& r) { return r.trials_run; })
        .def_property_readonly("witness_k", [](const FptResult& r) { return r.witness_k; })
        .def_property_readonly("walk", [](const FptResult& r) { return r.witness_walk; })
        .def("__repr__", [](const FptResult& r) {
            return "<CompatResult " + std::string(answer_name(r.answer)) +
                   " trials=" + std::to_string(r.trials_run) + ">";
        });

    m.def("exact_match", &exact_match, py::arg("graph"), py::arg("query"));
    m.def("min_edits_query_only", &min_edits_query_only, py::arg("graph"), py::arg("query"));
    m.def(
        "min_edits_dag",
        [](const LabeledGraph& g, const QueryString& q, const std::string& mode) {
            return min_edits_dag(g, q, edit_mode_of(mode));
        },
        py::arg("graph"), py::arg("query"), py::arg("mode") = "labels");
    m.def("is_dag", [](const LabeledGraph& g) { return check_dag(g).is_dag; }, py::arg("graph"));

    m.def(
        "compat",
        [](const LabeledGraph& g, const QueryString& q, const std::string& mode, double delta,
           std::uint64_t seed, std::uint64_t trials, unsigned workers) {
            FptConfig cfg;
            cfg.mode = mode == "mc" ? FptMode::MonteCarlo : FptMode::Deterministic;
            if (mode != "mc" && mode != "det") throw ValidationError("unknown mode: " + mode);
            cfg.delta = delta;
            cfg.seed = seed;
            cfg.trial_budget = trials;
            cfg.workers = workers;
            return fpt_compatible(g, q, cfg);
        },
        py::arg("graph"), py::arg("query"), py::arg("mode") = "det", py::arg("delta") = 0.01,
        py::arg("seed") = 0, py::arg("trials") = 0, py::arg("workers") = 1);

    m.def(
        "oracle_compatible",
        [](const LabeledGraph& g, const QueryString& q, std::uint64_t budget) {
            return oracle_compatible(g, q, OracleOptions{budget});
        },
        py::arg("graph"), py::arg("query"), py::arg("budget") = OracleOptions{}.node_budget);
    m.def(
        "oracle_min_edits",
        [](const LabeledGraph& g, const QueryString& q, const std::string& mode,
           std::uint64_t budget) -> std::optional<std::pair<std::size_t, Walk>> {
            const OracleOptions opts{budget};
            std::optional<OracleCost> best;
            switch (edit_mode_of(mode)) {
                case EditMode::QueryOnly: best = oracle_min_edits_query_only(g, q, opts); break;
                case EditMode::LabelsOnly: best = oracle_min_edits_restricted(g, q, opts); break;
                case EditMode::Both: best = oracle_min_edits_both(g, q, opts); break;
            }
            if (!best) return std::nullopt;
            return std::pair{best->cost, best->walk};
        },
        py::arg("graph"), py::arg("query"), py::arg("mode") = "labels",
        py::arg("budget") = OracleOptions{}.node_budget);

    m.def("materialize_restricted_witness", &materialize_restricted_witness, py::arg("graph"),
          py::arg("query"), py::arg("walk"));
    m.def("restrict_alphabet", &restrict_alphabet, py::arg("graph"), py::arg("query"));

    m.def(
        "gen_instance",
        [](const std::string& shape, std::uint32_t vertices, double edge_prob,
           std::uint32_t alphabet, std::uint32_t label_len, std::uint32_t query_len, bool plant,
           std::uint64_t seed) {
            GenSpec spec;
            spec.shape = shape_of(shape);
            spec.vertex_count = vertices;
            spec.edge_probability = edge_prob;
            spec.alphabet_size = alphabet;
            spec.max_label_len = label_len;
            spec.query_length = query_len;
            spec.plant_match = plant;
            spec.seed = seed;
            return gen_instance(spec);
        },
        py::arg("shape") = "general", py::arg("vertices") = 8, py::arg("edge_prob") = 0.25,
        py::arg("alphabet") = 4, py::arg("label_len") = 3, py::arg("query_len") = 6,
        py::arg("plant") = false, py::arg("seed") = 0);

    py::class_<ReductionArtifact>(m, "Reduction")
        .def_property_readonly("graph", [](const ReductionArtifact& a) { return a.graph; })
        .def_property_readonly("query", [](const ReductionArtifact& a) { return a.query; })
        .def("extract_hpath",
             [](const ReductionArtifact& a, const Walk& walk) { return extract_hpath(a, walk); },
             py::arg("walk"))
        .def("extract_cover",
             [](const ReductionArtifact& a, const MatchWitness& w) { return extract_cover(a, w); },
             py::arg("witness"));

    m.def(
        "reduce_hpath_unit",
        [](std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
           std::uint32_t h) { return reduce_hpath_unit({PlainGraph(n, std::move(edges)), h}); },
        py::arg("n"), py::arg("edges"), py::arg("h"));
    m.def(
        "reduce_hpath_binary",
        [](std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
           std::uint32_t h) { return reduce_hpath_binary({PlainGraph(n, std::move(edges)), h}); },
        py::arg("n"), py::arg("edges"), py::arg("h"));
    m.def(
        "reduce_setcover",
        [](std::uint32_t universe, std::vector<std::vector<std::uint32_t>> sets) {
            return reduce_setcover({universe, std::move(sets)});
        },
        py::arg("universe"), py::arg("sets"));

    m.def(
        "oracle_hpath",
        [](std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
           std::uint32_t h, std::uint64_t budget) {
            return oracle_hpath(PlainGraph(n, std::move(edges)), h, OracleOptions{budget});
        },
        py::arg("n"), py::arg("edges"), py::arg("h"),
        py::arg("budget") = OracleOptions{}.node_budget);
    m.def(
        "oracle_set_cover",
        [](std::uint32_t universe, const std::vector<std::vector<std::uint32_t>>& sets,
           std::uint64_t budget) { return oracle_set_cover(universe, sets, OracleOptions{budget}); },
        py::arg("universe"), py::arg("sets"), py::arg("budget") = OracleOptions{}.node_budget);
}
