#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgmatch/bench.hpp"
#include "sgmatch/errors.hpp"
#include "sgmatch/fpt.hpp"
#include "sgmatch/generate.hpp"
#include "sgmatch/io.hpp"
#include "sgmatch/oracle.hpp"
#include "sgmatch/poly.hpp"
#include "sgmatch/reductions.hpp"
#include "sgmatch/restrict.hpp"

namespace {

using namespace sgmatch;

// Exit codes: 0 success/yes, 1 no-match/no/probably-no, 2 usage or input
// error, 3 cross-check failure.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw ParseError("short write to " + path);
}

struct Globals {
    std::string graph_path;
    std::string query_path;
    std::uint64_t seed = 0;
    std::string format = "text";
};

struct Instance {
    LabeledGraph graph;
    QueryString query;
};

Instance load_instance(const Globals& g) {
    if (g.graph_path.empty()) throw ParseError("this command needs --graph");
    if (g.query_path.empty()) throw ParseError("this command needs --query");
    LabeledGraph graph = parse_graph(read_file(g.graph_path));
    QueryString query = parse_query(read_file(g.query_path), graph.alphabet());
    return {std::move(graph), std::move(query)};
}

// One row of primary output. Text format prints "key: value" lines; csv
// prints a header line and a value line. Timings never appear here, so both
// renderings are byte-stable for fixed inputs.
struct Summary {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string key, std::uint64_t value) {
        add(std::move(key), std::to_string(value));
    }

    void emit(const std::string& format) const {
        if (format == "csv") {
            std::string head, row;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                head += (i ? "," : "") + fields[i].first;
                row += (i ? "," : "") + fields[i].second;
            }
            std::cout << head << '\n' << row << '\n';
        } else {
            for (const auto& [key, value] : fields) std::cout << key << ": " << value << '\n';
        }
    }
};

std::string join_ids(std::span<const std::uint32_t> ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + std::to_string(ids[i]);
    return out;
}

// Witness JSON accompanies text output only; csv stays a flat table.
void emit_witness(const Globals& g, const LabeledGraph& graph, const MatchWitness& witness) {
    if (g.format != "csv") std::cout << witness_to_json(witness, graph);
}

MatchWitness materialize_query_witness(const LabeledGraph& graph, const QueryString& query,
                                       const Walk& walk) {
    const auto spelled = spell(graph, walk);
    std::vector<QueryEdit> edits;
    for (std::size_t i = 0; i < spelled.size(); ++i)
        if (spelled[i] != query.at(i + 1))
            edits.push_back({static_cast<std::uint32_t>(i + 1), spelled[i]});
    return make_witness(graph, query.size(), walk, {}, std::move(edits));
}

int run_match(const Globals& g) {
    auto [graph, query] = load_instance(g);
    const auto witness = exact_match(graph, query);
    Summary s;
    s.add("answer", witness ? "match" : "no-match");
    if (witness) s.add("walk", join_ids(witness->walk));
    s.emit(g.format);
    if (!witness) return kExitNo;
    emit_witness(g, graph, *witness);
    return kExitYes;
}

int run_min_edits(const Globals& g, const std::string& mode, bool dag_only) {
    auto [graph, query] = load_instance(g);
    if (dag_only && !check_dag(graph).is_dag)
        throw ValidationError("--dag-only given but the graph has a cycle");
    std::optional<MatchWitness> witness;
    if (mode == "query")
        witness = min_edits_query_only(graph, query);
    else
        witness = min_edits_dag(graph, query, mode == "both" ? EditMode::Both : EditMode::LabelsOnly);
    Summary s;
    s.add("answer", witness ? "cost" : "no-walk");
    if (witness) {
        s.add("cost", witness->cost());
        s.add("walk", join_ids(witness->walk));
    }
    s.emit(g.format);
    if (!witness) return kExitNo;
    emit_witness(g, graph, *witness);
    return kExitYes;
}

int run_compat(const Globals& g, const std::string& mode, double delta, std::uint64_t trials,
               unsigned workers) {
    auto [graph, query] = load_instance(g);
    FptConfig cfg;
    cfg.mode = mode == "mc" ? FptMode::MonteCarlo : FptMode::Deterministic;
    cfg.delta = delta;
    cfg.seed = g.seed;
    cfg.trial_budget = trials;
    cfg.workers = workers;
    const FptResult res = fpt_compatible(graph, query, cfg);
    Summary s;
    switch (res.answer) {
        case FptAnswer::Yes: s.add("answer", "yes"); break;
        case FptAnswer::No: s.add("answer", "no"); break;
        case FptAnswer::ProbablyNo: s.add("answer", "probably-no"); break;
    }
    s.add("trials", res.trials_run);
    if (res.answer == FptAnswer::Yes) {
        s.add("witness-k", res.witness_k);
        s.add("walk", join_ids(*res.witness_walk));
    }
    s.emit(g.format);
    if (res.answer != FptAnswer::Yes) return kExitNo;
    emit_witness(g, graph, materialize_restricted_witness(graph, query, *res.witness_walk));
    return kExitYes;
}

int run_oracle_compat(const Globals& g, std::uint64_t budget) {
    auto [graph, query] = load_instance(g);
    const OracleOptions opts{budget};
    const auto best = oracle_min_edits_restricted(graph, query, opts);
    Summary s;
    s.add("answer", best ? "yes" : "no");
    if (best) s.add("walk", join_ids(best->walk));
    s.emit(g.format);
    if (!best) return kExitNo;
    emit_witness(g, graph, materialize_restricted_witness(graph, query, best->walk));
    return kExitYes;
}

int run_oracle_min_edits(const Globals& g, const std::string& mode, std::uint64_t budget) {
    auto [graph, query] = load_instance(g);
    const OracleOptions opts{budget};
    std::optional<OracleCost> best;
    if (mode == "query")
        best = oracle_min_edits_query_only(graph, query, opts);
    else if (mode == "labels")
        best = oracle_min_edits_restricted(graph, query, opts);
    else
        best = oracle_min_edits_both(graph, query, opts);
    Summary s;
    s.add("answer", best ? "cost" : "no-walk");
    if (best) {
        s.add("cost", best->cost);
        s.add("walk", join_ids(best->walk));
    }
    s.emit(g.format);
    if (!best) return kExitNo;
    MatchWitness witness;
    if (mode == "query")
        witness = materialize_query_witness(graph, query, best->walk);
    else if (mode == "labels")
        witness = materialize_restricted_witness(graph, query, best->walk);
    else
        witness = materialize_both_witness(graph, query, best->walk);
    if (verify_witness(graph, query, witness) != best->cost)
        throw WitnessError("materialized witness cost disagrees with the search");
    emit_witness(g, graph, witness);
    return kExitYes;
}

int run_oracle_hpath(const Globals& g, const std::string& in_path, std::uint64_t budget) {
    const auto inst = parse_hpath_instance(read_file(in_path));
    const auto path = oracle_hpath(inst.graph, inst.h, OracleOptions{budget});
    Summary s;
    s.add("answer", path ? "path" : "none");
    if (path) s.add("path", join_ids(*path));
    s.emit(g.format);
    return path ? kExitYes : kExitNo;
}

int run_oracle_setcover(const Globals& g, const std::string& in_path, std::uint64_t budget) {
    const auto inst = parse_setcover_instance(read_file(in_path));
    const auto cover = oracle_set_cover(inst.universe_size, inst.sets, OracleOptions{budget});
    Summary s;
    s.add("answer", cover ? "cover" : "none");
    if (cover) {
        s.add("size", cover->size());
        std::vector<std::uint32_t> one_based(*cover);
        for (auto& i : one_based) ++i;
        s.add("sets", join_ids(one_based));
    }
    s.emit(g.format);
    return cover ? kExitYes : kExitNo;
}

int run_reduce(const Globals& g, const std::string& kind, const std::string& in_path,
               const std::string& out_graph, const std::string& out_query) {
    const std::string text = read_file(in_path);
    const ReductionArtifact art = [&]() -> ReductionArtifact {
        if (kind == "setcover") return reduce_setcover(parse_setcover_instance(text));
        if (kind == "hpath-unit") return reduce_hpath_unit(parse_hpath_instance(text));
        return reduce_hpath_binary(parse_hpath_instance(text));
    }();
    write_file(out_graph, serialize_graph(art.graph));
    write_file(out_query, serialize_query(art.query, art.graph.alphabet()));
    Summary s;
    s.add("reduction", kind);
    s.add("vertices", art.graph.vertex_count());
    s.add("edges", art.graph.edge_count());
    s.add("query-length", art.query.size());
    if (kind == "setcover") s.add("cost-bound", art.source_cover.universe_size - 1);
    s.emit(g.format);
    return kExitYes;
}

int run_gen(const Globals& g, const GenSpec& spec, const std::string& out_graph,
            const std::string& out_query) {
    auto [graph, query] = gen_instance(spec);
    write_file(out_graph, serialize_graph(graph));
    write_file(out_query, serialize_query(query, graph.alphabet()));
    Summary s;
    s.add("vertices", graph.vertex_count());
    s.add("edges", graph.edge_count());
    s.add("query-length", query.size());
    s.add("planted", spec.plant_match ? "yes" : "no");
    s.emit(g.format);
    return kExitYes;
}

int run_bench(const Globals& g, const BenchOptions& opts, const std::string& out_csv) {
    const SuiteResult result = run_suite(default_suite(), opts);
    const std::string csv = records_to_csv(result.records);
    std::cout << (g.format == "csv" ? csv : records_to_text(result.records));
    if (!out_csv.empty()) write_file(out_csv, csv);
    if (!result.all_agreed) {
        std::cerr << "cross-check failure: solvers disagreed\n";
        return kExitCrossCheck;
    }
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"walks in vertex-labeled graphs: exact, approximate, and FPT matching"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--graph", g.graph_path, "graph file");
    app.add_option("--query", g.query_path, "query file");
    app.add_option("--seed", g.seed, "RNG seed for randomized commands");
    app.add_option("--format", g.format, "summary output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    auto* match_cmd = app.add_subcommand("match", "exact occurrence of the query");
    match_cmd->fallthrough();

    auto* minedits_cmd = app.add_subcommand("min-edits", "minimum substitutions to match");
    minedits_cmd->fallthrough();
    std::string me_mode = "query";
    bool me_dag_only = false;
    minedits_cmd->add_option("--mode", me_mode, "which side may be edited")
        ->check(CLI::IsMember({"query", "labels", "both"}))
        ->capture_default_str();
    minedits_cmd->add_flag("--dag-only", me_dag_only, "refuse cyclic graphs up front");

    auto* compat_cmd = app.add_subcommand("compat", "color-coding compatibility decider");
    compat_cmd->fallthrough();
    std::string co_mode = "det";
    double co_delta = 0.01;
    std::uint64_t co_trials = 0;
    unsigned co_workers = 1;
    compat_cmd->add_option("--mode", co_mode, "deterministic family or Monte Carlo")
        ->check(CLI::IsMember({"det", "mc"}))
        ->capture_default_str();
    compat_cmd->add_option("--delta", co_delta, "mc: miss probability bound")
        ->capture_default_str();
    compat_cmd->add_option("--trials", co_trials, "cap on DP trials, 0 = unlimited");
    compat_cmd->add_option("--workers", co_workers, "trial worker threads")
        ->capture_default_str();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference solvers");
    oracle_cmd->fallthrough();
    oracle_cmd->require_subcommand(1);
    std::uint64_t budget = OracleOptions{}.node_budget;
    oracle_cmd->add_option("--budget", budget, "search node budget")->capture_default_str();

    auto* ocompat_cmd = oracle_cmd->add_subcommand("compat", "compatibility by enumeration");
    ocompat_cmd->fallthrough();
    auto* ominedits_cmd = oracle_cmd->add_subcommand("min-edits", "minimum cost by enumeration");
    ominedits_cmd->fallthrough();
    std::string ome_mode = "labels";
    ominedits_cmd->add_option("--mode", ome_mode, "which side may be edited")
        ->check(CLI::IsMember({"query", "labels", "both"}))
        ->capture_default_str();
    std::string oracle_in;
    auto* ohpath_cmd = oracle_cmd->add_subcommand("hpath", "simple path on h vertices");
    ohpath_cmd->fallthrough();
    ohpath_cmd->add_option("--in", oracle_in, "instance file")->required();
    auto* osetcover_cmd = oracle_cmd->add_subcommand("setcover", "minimum set cover");
    osetcover_cmd->fallthrough();
    osetcover_cmd->add_option("--in", oracle_in, "instance file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "hardness reductions as generators");
    reduce_cmd->fallthrough();
    reduce_cmd->require_subcommand(1);
    std::string red_in, red_out_graph, red_out_query;
    const auto reduce_sub = [&](const char* name, const char* desc) {
        auto* sub = reduce_cmd->add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("--in", red_in, "source instance file")->required();
        sub->add_option("--out-graph", red_out_graph, "target graph file")->required();
        sub->add_option("--out-query", red_out_query, "target query file")->required();
        return sub;
    };
    auto* red_unit = reduce_sub("hpath-unit", "path instance to unit-label matching");
    auto* red_bin = reduce_sub("hpath-bin", "path instance to binary-alphabet matching");
    auto* red_cover = reduce_sub("setcover", "cover instance to label-edit matching");

    auto* gen_cmd = app.add_subcommand("gen", "seeded random instances");
    gen_cmd->fallthrough();
    GenSpec spec;
    std::string gen_shape = "general";
    std::string gen_out_graph, gen_out_query;
    gen_cmd->add_option("--shape", gen_shape, "instance shape")
        ->check(CLI::IsMember({"general", "dag", "unit"}))
        ->capture_default_str();
    gen_cmd->add_option("--vertices", spec.vertex_count, "vertex count")->capture_default_str();
    gen_cmd->add_option("--edge-prob", spec.edge_probability, "per-pair edge probability")
        ->capture_default_str();
    gen_cmd->add_option("--alphabet", spec.alphabet_size, "alphabet size")->capture_default_str();
    gen_cmd->add_option("--label-len", spec.max_label_len, "maximum label length")
        ->capture_default_str();
    gen_cmd->add_option("--query-len", spec.query_length, "query length")->capture_default_str();
    gen_cmd->add_flag("--plant", spec.plant_match, "embed a walk spelling the query");
    gen_cmd->add_option("--out-graph", gen_out_graph, "graph file to write")->required();
    gen_cmd->add_option("--out-query", gen_out_query, "query file to write")->required();

    auto* bench_cmd = app.add_subcommand("bench", "cross-checked solver suite");
    bench_cmd->fallthrough();
    BenchOptions bopts;
    std::string bench_out;
    bench_cmd->add_option("--repeats", bopts.repeats, "timing repeats")->capture_default_str();
    bench_cmd->add_option("--workers", bopts.workers, "fpt worker threads")->capture_default_str();
    bench_cmd->add_option("--delta", bopts.delta, "mc miss bound")->capture_default_str();
    bench_cmd->add_option("--budget", bopts.oracle_budget, "oracle node budget")
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "also write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (match_cmd->parsed()) return run_match(g);
        if (minedits_cmd->parsed()) return run_min_edits(g, me_mode, me_dag_only);
        if (compat_cmd->parsed()) return run_compat(g, co_mode, co_delta, co_trials, co_workers);
        if (oracle_cmd->parsed()) {
            if (ocompat_cmd->parsed()) return run_oracle_compat(g, budget);
            if (ominedits_cmd->parsed()) return run_oracle_min_edits(g, ome_mode, budget);
            if (ohpath_cmd->parsed()) return run_oracle_hpath(g, oracle_in, budget);
            return run_oracle_setcover(g, oracle_in, budget);
        }
        if (reduce_cmd->parsed()) {
            const std::string kind = red_unit->parsed()    ? "hpath-unit"
                                     : red_bin->parsed()   ? "hpath-bin"
                                     : red_cover->parsed() ? "setcover"
                                                           : "";
            return run_reduce(g, kind, red_in, red_out_graph, red_out_query);
        }
        if (gen_cmd->parsed()) {
            spec.shape = gen_shape == "dag"    ? InstanceShape::Dag
                         : gen_shape == "unit" ? InstanceShape::UnitLabels
                                               : InstanceShape::General;
            spec.seed = g.seed;
            return run_gen(g, spec, gen_out_graph, gen_out_query);
        }
        bopts.seed = g.seed;
        return run_bench(g, bopts, bench_out);
    } catch (const WitnessError& e) {
        std::cerr << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
}
