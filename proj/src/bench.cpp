#include "sgmatch/bench.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "sgmatch/oracle.hpp"
#include "sgmatch/poly.hpp"
#include "sgmatch/rng.hpp"

namespace sgmatch {

namespace {

template <class F>
std::pair<std::uint64_t, std::invoke_result_t<F>> time_best_of(unsigned repeats, F&& fn) {
    std::uint64_t best = UINT64_MAX;
    std::optional<std::invoke_result_t<F>> result;
    for (unsigned i = 0; i < (repeats == 0 ? 1 : repeats); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        auto r = fn();
        const auto t1 = std::chrono::steady_clock::now();
        const auto us =
            static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
        if (us < best) best = us;
        result = std::move(r);
    }
    return {best, std::move(*result)};
}

std::string cost_answer(const std::optional<OracleCost>& c) {
    return c ? "cost=" + std::to_string(c->cost) : "none";
}

std::string cost_answer(const std::optional<MatchWitness>& w) {
    return w ? "cost=" + std::to_string(w->cost()) : "none";
}

} // namespace

std::vector<BenchInstance> default_suite() {
    std::vector<BenchInstance> suite;
    GenSpec unit;
    unit.shape = InstanceShape::UnitLabels;
    unit.vertex_count = 7;
    unit.edge_probability = 0.3;
    unit.alphabet_size = 3;
    unit.query_length = 5;
    suite.push_back({"unit-sparse", unit});

    unit.vertex_count = 8;
    unit.edge_probability = 0.4;
    unit.plant_match = true;
    suite.push_back({"unit-planted", unit});

    GenSpec dag;
    dag.shape = InstanceShape::Dag;
    dag.vertex_count = 9;
    dag.edge_probability = 0.5;
    dag.alphabet_size = 4;
    dag.max_label_len = 2;
    dag.query_length = 6;
    suite.push_back({"dag-mixed", dag});

    GenSpec gen;
    gen.shape = InstanceShape::General;
    gen.vertex_count = 7;
    gen.edge_probability = 0.35;
    gen.alphabet_size = 4;
    gen.max_label_len = 3;
    gen.query_length = 6;
    suite.push_back({"general-long-labels", gen});

    gen.vertex_count = 6;
    gen.edge_probability = 0.4;
    gen.plant_match = true;
    suite.push_back({"general-planted", gen});
    return suite;
}

SuiteResult run_suite(const std::vector<BenchInstance>& instances, const BenchOptions& opts) {
    SuiteResult out;
    OracleOptions oracle_opts{opts.oracle_budget};
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const BenchInstance& inst = instances[idx];
        GenSpec spec = inst.spec;
        spec.seed = mix_seed(opts.seed, idx);
        auto [graph, query] = gen_instance(spec);
        const bool dag = check_dag(graph).is_dag;

        auto push = [&](std::string solver, std::string answer, std::uint64_t us,
                        std::uint64_t trials, bool agreed) {
            out.records.push_back({inst.name, std::move(solver), std::move(answer), us, trials, agreed});
            if (!agreed) out.all_agreed = false;
        };

        if (graph.unit_labels()) {
            const auto [o_us, o_yes] =
                time_best_of(opts.repeats, [&] { return oracle_compatible(graph, query, oracle_opts); });
            push("oracle-compat", o_yes ? "yes" : "no", o_us, 0, true);

            FptConfig det;
            det.mode = FptMode::Deterministic;
            det.workers = opts.workers;
            const auto [d_us, d_res] =
                time_best_of(opts.repeats, [&] { return fpt_compatible(graph, query, det); });
            const bool det_yes = d_res.answer == FptAnswer::Yes;
            push("fpt-det", det_yes ? "yes" : "no", d_us, d_res.trials_run,
                 !opts.cross_check || det_yes == o_yes);

            FptConfig mc;
            mc.mode = FptMode::MonteCarlo;
            mc.delta = opts.delta;
            mc.seed = mix_seed(opts.seed, idx, 0xfacadeULL);
            mc.workers = opts.workers;
            const auto [m_us, m_res] =
                time_best_of(opts.repeats, [&] { return fpt_compatible(graph, query, mc); });
            const bool mc_yes = m_res.answer == FptAnswer::Yes;
            // A missed yes is within the confidence contract; a false yes is not.
            push("fpt-mc", mc_yes ? "yes" : "probably-no", m_us, m_res.trials_run,
                 !opts.cross_check || !mc_yes || o_yes);
        }

        const auto [r_us, r_cost] = time_best_of(
            opts.repeats, [&] { return oracle_min_edits_restricted(graph, query, oracle_opts); });
        push("oracle-restricted", cost_answer(r_cost), r_us, 0, true);
        const auto [b_us, b_cost] =
            time_best_of(opts.repeats, [&] { return oracle_min_edits_both(graph, query, oracle_opts); });
        push("oracle-both", cost_answer(b_cost), b_us, 0, true);
        if (dag) {
            const auto [dl_us, dl] = time_best_of(
                opts.repeats, [&] { return min_edits_dag(graph, query, EditMode::LabelsOnly); });
            const bool l_ok = (dl.has_value() == r_cost.has_value()) &&
                              (!dl || dl->cost() == r_cost->cost);
            push("dag-labels", cost_answer(dl), dl_us, 0, !opts.cross_check || l_ok);
            const auto [db_us, db] =
                time_best_of(opts.repeats, [&] { return min_edits_dag(graph, query, EditMode::Both); });
            const bool b_ok = (db.has_value() == b_cost.has_value()) &&
                              (!db || db->cost() == b_cost->cost);
            push("dag-both", cost_answer(db), db_us, 0, !opts.cross_check || b_ok);
        }

        const auto [q_us, q_wit] =
            time_best_of(opts.repeats, [&] { return min_edits_query_only(graph, query); });
        const auto [qo_us, qo_cost] = time_best_of(
            opts.repeats, [&] { return oracle_min_edits_query_only(graph, query, oracle_opts); });
        const bool q_ok = (q_wit.has_value() == qo_cost.has_value()) &&
                          (!q_wit || q_wit->cost() == qo_cost->cost);
        push("poly-query", cost_answer(q_wit), q_us, 0, !opts.cross_check || q_ok);
        push("oracle-query", cost_answer(qo_cost), qo_us, 0, true);
    }
    return out;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "instance,solver,answer,micros,trials,agreed\n";
    for (const BenchRecord& r : records)
        out << r.instance << ',' << r.solver << ',' << r.answer << ',' << r.micros << ',' << r.trials
            << ',' << (r.agreed ? "yes" : "no") << '\n';
    return std::move(out).str();
}

std::string records_to_text(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    for (const BenchRecord& r : records) {
        out << r.instance << "  " << r.solver << "  " << r.answer << "  " << r.micros << "us";
        if (r.trials) out << "  trials=" << r.trials;
        if (!r.agreed) out << "  DISAGREES";
        out << '\n';
    }
    return std::move(out).str();
}

} // namespace sgmatch
