#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "sgmatch/bench.hpp"
#include "sgmatch/errors.hpp"
#include "sgmatch/generate.hpp"
#include "sgmatch/io.hpp"
#include "sgmatch/poly.hpp"

#include "support.hpp"

using namespace sgmatch;

TEST_SUITE("bench") {

TEST_CASE("generation is a pure function of the spec") {
    GenSpec spec;
    spec.vertex_count = 7;
    spec.edge_probability = 0.4;
    spec.alphabet_size = 3;
    spec.max_label_len = 2;
    spec.query_length = 5;
    spec.seed = 11;
    const auto [g1, q1] = gen_instance(spec);
    const auto [g2, q2] = gen_instance(spec);
    CHECK(g1.structurally_equal(g2));
    CHECK(q1 == q2);
    CHECK(serialize_graph(g1) == serialize_graph(g2));
    CHECK(serialize_query(q1, g1.alphabet()) == serialize_query(q2, g2.alphabet()));

    spec.seed = 12;
    const auto [g3, q3] = gen_instance(spec);
    CHECK((serialize_graph(g1) != serialize_graph(g3) ||
           serialize_query(q1, g1.alphabet()) != serialize_query(q3, g3.alphabet())));
}

TEST_CASE("shape knobs are honored") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenSpec spec;
        spec.vertex_count = 8;
        spec.edge_probability = 0.5;
        spec.seed = seed;

        spec.shape = InstanceShape::Dag;
        const auto [dag, dq] = gen_instance(spec);
        CHECK(check_dag(dag).is_dag);
        for (auto [u, v] : dag.edges()) CHECK(u < v);

        spec.shape = InstanceShape::UnitLabels;
        const auto [unit, uq] = gen_instance(spec);
        CHECK(unit.unit_labels());
    }
}

TEST_CASE("planted instances really contain the query") {
    int planted_checked = 0;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        GenSpec spec;
        spec.vertex_count = 7;
        spec.edge_probability = 0.35;
        spec.alphabet_size = 3;
        spec.max_label_len = 2;
        spec.query_length = 5;
        spec.plant_match = true;
        spec.seed = seed;
        const auto [g, q] = gen_instance(spec);
        const auto hit = exact_match(g, q);
        if (hit) {
            ++planted_checked;
            CHECK(verify_witness(g, q, *hit) == 0);
        }
    }
    // The planting walk occasionally fails to land on sparse graphs; the
    // generator then falls back to a random query. Most seeds must plant.
    CHECK(planted_checked >= 12);
}

TEST_CASE("generator validates its spec") {
    GenSpec spec;
    spec.vertex_count = 0;
    CHECK_THROWS_AS((void)gen_instance(spec), ValidationError);
    spec = GenSpec{};
    spec.edge_probability = 1.5;
    CHECK_THROWS_WITH_AS((void)gen_instance(spec),
                         "invalid: edge probability must lie in [0,1]", ValidationError);
    spec = GenSpec{};
    spec.edge_probability = -0.1;
    CHECK_THROWS_AS((void)gen_instance(spec), ValidationError);
    spec = GenSpec{};
    spec.alphabet_size = 0;
    CHECK_THROWS_AS((void)gen_instance(spec), ValidationError);
    spec = GenSpec{};
    spec.query_length = 0;
    CHECK_THROWS_AS((void)gen_instance(spec), ValidationError);
    spec = GenSpec{};
    spec.max_label_len = 0;
    CHECK_THROWS_AS((void)gen_instance(spec), ValidationError);
}

TEST_CASE("csv starts from a fixed header") {
    CHECK(records_to_csv({}) == "instance,solver,answer,micros,trials,agreed\n");
    BenchRecord rec;
    rec.instance = "demo";
    rec.solver = "fpt-det";
    rec.answer = "yes";
    rec.micros = 41;
    rec.trials = 7;
    const auto csv = records_to_csv({rec});
    CHECK(csv == "instance,solver,answer,micros,trials,agreed\n"
                 "demo,fpt-det,yes,41,7,yes\n");
    const auto text = records_to_text({rec});
    CHECK(text.find("demo") != std::string::npos);
    CHECK(text.find("fpt-det") != std::string::npos);
}

TEST_CASE("the default suite cross-checks clean") {
    BenchOptions opts;
    opts.repeats = 1;
    const auto result = run_suite(default_suite(), opts);
    REQUIRE_FALSE(result.records.empty());
    CHECK(result.all_agreed);
    for (const auto& rec : result.records) {
        CHECK(rec.agreed);
        CHECK_FALSE(rec.instance.empty());
        CHECK_FALSE(rec.solver.empty());
        CHECK_FALSE(rec.answer.empty());
    }

    // Deterministic modulo timing: rerun and compare everything but micros.
    const auto again = run_suite(default_suite(), opts);
    REQUIRE(again.records.size() == result.records.size());
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        CHECK(result.records[i].instance == again.records[i].instance);
        CHECK(result.records[i].solver == again.records[i].solver);
        CHECK(result.records[i].answer == again.records[i].answer);
        CHECK(result.records[i].trials == again.records[i].trials);
        CHECK(result.records[i].agreed == again.records[i].agreed);
    }

    const auto csv = records_to_csv(result.records);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) ==
          result.records.size() + 1);
}

} // TEST_SUITE
