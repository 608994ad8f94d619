#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sgmatch/errors.hpp"
#include "sgmatch/generate.hpp"
#include "sgmatch/oracle.hpp"
#include "sgmatch/poly.hpp"
#include "sgmatch/rng.hpp"

#include "support.hpp"

using namespace sgmatch;

namespace {

// Same labels, one extra edge.
LabeledGraph with_edge(const LabeledGraph& g, VertexId src, VertexId dst) {
    std::vector<Label> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(sgtest::label_vec(g, v));
    auto edges = g.edges();
    edges.emplace_back(src, dst);
    return LabeledGraph(g.alphabet(), std::move(labels), std::move(edges));
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("exact_match unrolls a self-loop") {
    const auto g = sgtest::graph_of(sgtest::self_loop_doc());
    const auto q = sgtest::query_of(g, "a a a");
    const auto w = exact_match(g, q);
    REQUIRE(w.has_value());
    CHECK(w->walk == Walk{0, 0, 0});
    CHECK(w->cost() == 0);
    CHECK(verify_witness(g, q, *w) == 0);
}

TEST_CASE("exact_match respects edge direction") {
    const auto g = parse_graph("sigma a b\nv 0 a\nv 1 b\ne 0 1\n");
    CHECK_FALSE(exact_match(g, sgtest::query_of(g, "b a")).has_value());
    CHECK(exact_match(g, sgtest::query_of(g, "a b")).has_value());
}

TEST_CASE("exact_match crosses the worked cover graph") {
    const auto g = sgtest::graph_of(sgtest::cover_graph_doc());
    const auto q = sgtest::query_of(g, "x0 x1 y1 x0");
    const auto w = exact_match(g, q);
    REQUIRE(w.has_value());
    CHECK(w->walk == Walk{0, 1, 4, 0});
    CHECK(verify_witness(g, q, *w) == 0);
}

TEST_CASE("exact matches are exactly the cost-zero instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec spec;
        spec.vertex_count = 6;
        spec.edge_probability = 0.4;
        spec.alphabet_size = 3;
        spec.max_label_len = 2;
        spec.query_length = 4;
        spec.plant_match = seed % 2 == 0;
        spec.seed = seed;
        const auto [g, q] = gen_instance(spec);
        const auto exact = exact_match(g, q);
        const auto approx = min_edits_query_only(g, q);
        if (exact) {
            REQUIRE(approx.has_value());
            CHECK(approx->cost() == 0);
        } else if (approx) {
            CHECK(approx->cost() > 0);
        }
    }
}

TEST_CASE("min_edits_query_only counts forced mismatches") {
    const auto loop = sgtest::graph_of(sgtest::self_loop_doc());
    const auto w = min_edits_query_only(loop, sgtest::query_of(loop, "a b"));
    REQUIRE(w.has_value());
    CHECK(w->cost() == 1);
    CHECK(w->graph_edits.empty());
    REQUIRE(w->query_edits.size() == 1);
    CHECK(w->query_edits[0].position == 2);

    const auto path = parse_graph("sigma a b\nv 0 a\nv 1 b\ne 0 1\n");
    const auto w2 = min_edits_query_only(path, sgtest::query_of(path, "a b"));
    REQUIRE(w2.has_value());
    CHECK(w2->cost() == 0);
}

TEST_CASE("min_edits_query_only returns empty iff no walk fits") {
    const auto g = parse_graph("sigma a\nv 0 a\nv 1 a\ne 0 1\n");
    CHECK(min_edits_query_only(g, sgtest::query_of(g, "a a")).has_value());
    CHECK_FALSE(min_edits_query_only(g, sgtest::query_of(g, "a a a")).has_value());
}

TEST_CASE("min_edits_query_only agrees with the oracle") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        GenSpec spec;
        spec.vertex_count = 6;
        spec.edge_probability = 0.4;
        spec.alphabet_size = 3;
        spec.max_label_len = 2;
        spec.query_length = 5;
        spec.seed = seed;
        const auto [g, q] = gen_instance(spec);
        const auto mine = min_edits_query_only(g, q);
        const auto ref = oracle_min_edits_query_only(g, q);
        REQUIRE(mine.has_value() == ref.has_value());
        if (!mine) continue;
        CHECK(mine->cost() == ref->cost);
        CHECK(mine->walk == ref->walk); // both sides pick the lex-smallest optimum
        CHECK(verify_witness(g, q, *mine) == mine->cost());
    }
}

TEST_CASE("adding an edge never raises the query-only cost") {
    const auto g = parse_graph("sigma a b c\nv 0 a\nv 1 b\nv 2 c\ne 0 1\n");
    const auto q = sgtest::query_of(g, "a c");
    const auto before = min_edits_query_only(g, q);
    REQUIRE(before.has_value());
    CHECK(before->cost() == 1);
    const auto richer = with_edge(g, 0, 2);
    const auto after = min_edits_query_only(richer, q);
    REQUIRE(after.has_value());
    CHECK(after->cost() == 0);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenSpec spec;
        spec.vertex_count = 5;
        spec.edge_probability = 0.3;
        spec.alphabet_size = 3;
        spec.query_length = 4;
        spec.seed = seed;
        const auto [base, query] = gen_instance(spec);
        SplitMix64 rng(seed);
        const auto u = static_cast<VertexId>(rng.below(base.vertex_count()));
        const auto v = static_cast<VertexId>(rng.below(base.vertex_count()));
        const auto grown = with_edge(base, u, v);
        const auto a = min_edits_query_only(base, query);
        const auto b = min_edits_query_only(grown, query);
        if (a) {
            REQUIRE(b.has_value());
            CHECK(b->cost() <= a->cost());
        }
    }
}

TEST_CASE("check_dag classifies and orders") {
    const auto cover = sgtest::graph_of(sgtest::cover_graph_doc());
    CHECK_FALSE(check_dag(cover).is_dag);

    const auto loners = parse_graph("sigma a\nv 0 a\nv 1 a\n");
    CHECK(check_dag(loners).is_dag);

    const auto dag = parse_graph("sigma a\nv 0 a\nv 1 a\nv 2 a\ne 0 1\ne 0 2\ne 1 2\n");
    const auto res = check_dag(dag);
    REQUIRE(res.is_dag);
    std::vector<std::size_t> pos(dag.vertex_count());
    for (std::size_t i = 0; i < res.topo_order.size(); ++i) pos[res.topo_order[i]] = i;
    for (auto [src, dst] : dag.edges()) CHECK(pos[src] < pos[dst]);
}

TEST_CASE("removing the hub of the cover graph leaves a dag") {
    // Drop vertex 0 by re-indexing the remaining vertices.
    const auto g = sgtest::graph_of(sgtest::cover_graph_doc());
    std::vector<Label> labels;
    for (VertexId v = 1; v < g.vertex_count(); ++v) labels.push_back(sgtest::label_vec(g, v));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [src, dst] : g.edges())
        if (src != 0 && dst != 0) edges.emplace_back(src - 1, dst - 1);
    const LabeledGraph rest(g.alphabet(), std::move(labels), std::move(edges));
    CHECK(check_dag(rest).is_dag);
    // Paths are then at most two vertices, so three symbols never fit.
    CHECK_FALSE(min_edits_query_only(rest, sgtest::query_of(rest, "x0 z y1")).has_value());
    CHECK_FALSE(min_edits_dag(rest, sgtest::query_of(rest, "x0 z y1"), EditMode::Both).has_value());
}

TEST_CASE("min_edits_dag repairs a single mismatch in any mode") {
    const auto g = parse_graph("sigma a b c\nv 0 a\nv 1 c\ne 0 1\n");
    const auto q = sgtest::query_of(g, "a b");
    for (const EditMode mode : {EditMode::QueryOnly, EditMode::LabelsOnly, EditMode::Both}) {
        const auto w = min_edits_dag(g, q, mode);
        REQUIRE(w.has_value());
        CHECK(w->cost() == 1);
        CHECK(verify_witness(g, q, *w) == 1);
        if (mode == EditMode::LabelsOnly) CHECK(w->query_edits.empty());
        if (mode == EditMode::QueryOnly) CHECK(w->graph_edits.empty());
    }
}

TEST_CASE("min_edits_dag rejects cyclic graphs") {
    const auto g = sgtest::graph_of(sgtest::self_loop_doc());
    const auto q = sgtest::query_of(g, "a a");
    CHECK_THROWS_AS((void)min_edits_dag(g, q, EditMode::LabelsOnly), ValidationError);
}

TEST_CASE("dag costs coincide across modes and match the oracles") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec spec;
        spec.shape = InstanceShape::Dag;
        spec.vertex_count = 7;
        spec.edge_probability = 0.4;
        spec.alphabet_size = 3;
        spec.max_label_len = 2;
        spec.query_length = 4;
        spec.seed = seed;
        const auto [g, q] = gen_instance(spec);
        const auto labels = min_edits_dag(g, q, EditMode::LabelsOnly);
        const auto both = min_edits_dag(g, q, EditMode::Both);
        const auto qonly = min_edits_dag(g, q, EditMode::QueryOnly);
        const auto ref_restricted = oracle_min_edits_restricted(g, q);
        const auto ref_both = oracle_min_edits_both(g, q);
        REQUIRE(labels.has_value() == ref_restricted.has_value());
        REQUIRE(both.has_value() == ref_both.has_value());
        if (!labels) continue;
        CHECK(labels->cost() == both->cost());
        CHECK(labels->cost() == qonly->cost());
        CHECK(labels->cost() == ref_restricted->cost);
        CHECK(both->cost() == ref_both->cost);
        CHECK(verify_witness(g, q, *labels) == labels->cost());
        CHECK(verify_witness(g, q, *both) == both->cost());
        CHECK(verify_witness(g, q, *qonly) == qonly->cost());
    }
}

} // TEST_SUITE
