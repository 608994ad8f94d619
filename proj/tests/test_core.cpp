#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sgmatch/errors.hpp"
#include "sgmatch/generate.hpp"
#include "sgmatch/io.hpp"
#include "sgmatch/oracle.hpp"
#include "sgmatch/restrict.hpp"
#include "sgmatch/rng.hpp"
#include "sgmatch/witness.hpp"

#include "support.hpp"

using namespace sgmatch;

TEST_SUITE("core") {

TEST_CASE("alphabet holds ordered distinct tokens") {
    const Alphabet a({"x0", "z", "y1"});
    CHECK(a.size() == 3);
    CHECK(a.token(0) == "x0");
    CHECK(a.token(2) == "y1");
    CHECK(a.id("z") == 1);
    CHECK(a.contains("y1"));
    CHECK_FALSE(a.find("nope").has_value());
    CHECK_THROWS_AS((void)a.id("nope"), ParseError);

    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({""}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"a b"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"a,b"}), ValidationError);
}

TEST_CASE("parse_graph reads the minimal document") {
    const auto g = parse_graph("sigma a b\nv 0 a\nv 1 b\ne 0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.alphabet().tokens() == std::vector<std::string>{"a", "b"});
    CHECK(sgtest::label_vec(g, 0) == std::vector<SymbolId>{0});
    CHECK(sgtest::label_vec(g, 1) == std::vector<SymbolId>{1});
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("parse_graph rejects malformed documents") {
    CHECK_THROWS_AS(parse_graph("sigma a\nv 0 a\ne 0 5\n"), ParseError); // dangling endpoint
    CHECK_THROWS_AS(parse_graph("sigma a\nv 0 a\nv 0 a\n"), ParseError); // duplicate id
    CHECK_THROWS_AS(parse_graph("sigma a\nv 0 q\n"), ParseError);        // unknown token
    CHECK_THROWS_AS(parse_graph("sigma a\nv 0 a,,a\n"), ParseError);     // empty label piece
    CHECK_THROWS_AS(parse_graph("v 0 a\n"), ParseError);                 // missing alphabet
    CHECK_THROWS_AS(parse_graph("sigma a\nv 1 a\n"), ParseError);        // id gap
    CHECK_THROWS_AS(parse_graph("sigma a\n"), ParseError);               // no vertices
}

TEST_CASE("duplicate edge lines collapse") {
    const auto g = parse_graph("sigma a\nv 0 a\ne 0 0\ne 0 0\n");
    CHECK(g.edge_count() == 1);
}

TEST_CASE("the worked cover example parses and round-trips") {
    const auto g = sgtest::graph_of(sgtest::cover_graph_doc());
    CHECK(g.vertex_count() == 11);
    CHECK(g.edge_count() == 17);
    CHECK(g.alphabet().size() == 9);
    CHECK(serialize_graph(g) == sgtest::cover_graph_doc());
    CHECK(g.structurally_equal(parse_graph(serialize_graph(g))));
}

TEST_CASE("round trip preserves generated instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.edge_probability = 0.4;
        const auto [g, q] = gen_instance(spec);
        const auto g2 = parse_graph(serialize_graph(g));
        CHECK(g.structurally_equal(g2));
        CHECK(serialize_graph(g) == serialize_graph(g2));
        CHECK(parse_query(serialize_query(q, g.alphabet()), g2.alphabet()) == q);
    }
}

TEST_CASE("spell concatenates labels along the walk") {
    const auto g = sgtest::graph_of(sgtest::two_cycle_doc());
    CHECK(spell(g, {0}) == std::vector<SymbolId>{0});
    CHECK(spell(g, {0, 1, 0, 1}) == std::vector<SymbolId>{0, 1, 0, 1});
    CHECK(spelled_length(g, {0, 1, 0, 1}) == 4);

    const auto cover = sgtest::graph_of(sgtest::cover_graph_doc());
    const auto two = spell(cover, {0, 1});
    REQUIRE(two.size() == 2);
    CHECK(cover.alphabet().token(two[0]) == "x0");
    CHECK(cover.alphabet().token(two[1]) == "x1");
}

TEST_CASE("spelled length adds label lengths") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.edge_probability = 0.5;
        const auto [g, q] = gen_instance(spec);
        SplitMix64 rng(seed);
        Walk walk{static_cast<VertexId>(rng.below(g.vertex_count()))};
        std::size_t want = g.label_length(walk[0]);
        for (int step = 0; step < 6; ++step) {
            const auto outs = g.out_neighbors(walk.back());
            if (outs.empty()) break;
            walk.push_back(outs[rng.below(outs.size())]);
            want += g.label_length(walk.back());
        }
        CHECK(spell(g, walk).size() == want);
    }
}

TEST_CASE("validate_walk rejects broken walks") {
    const auto g = sgtest::graph_of(sgtest::two_cycle_doc());
    CHECK_NOTHROW(validate_walk(g, {0, 1, 0}));
    CHECK_THROWS_AS(validate_walk(g, {}), ValidationError);
    CHECK_THROWS_AS(validate_walk(g, {0, 0}), ValidationError);
    CHECK_THROWS_AS(validate_walk(g, {0, 7}), ValidationError);
    CHECK_THROWS_AS((void)spell(g, Walk{0, 0}), ValidationError);
}

TEST_CASE("verify_witness accepts the exact walk at cost zero") {
    const auto g = sgtest::graph_of(sgtest::two_cycle_doc());
    const auto q = sgtest::query_of(g, "a b a");
    const auto w = make_witness(g, q.size(), {0, 1, 0}, {}, {});
    CHECK(w.mapping == canonical_mapping(g, w.walk));
    CHECK(verify_witness(g, q, w) == 0);
}

TEST_CASE("verify_witness counts one edit per side") {
    const auto g = sgtest::graph_of(sgtest::two_cycle_doc());
    const auto q = sgtest::query_of(g, "b a");
    // Walk 0 1 spells "a b"; rewrite the first label and the second position.
    const auto w = make_witness(g, q.size(), {0, 1}, {LabelEdit{0, 1, 1}}, {QueryEdit{2, 1}});
    CHECK(verify_witness(g, q, w) == 2);
    CHECK(w.cost() == 2);
}

TEST_CASE("verify_witness certifies the worked cover walk") {
    const auto g = sgtest::graph_of(sgtest::cover_graph_doc());
    const auto q = sgtest::query_of(g, sgtest::cover_query_doc());
    const SymbolId z = g.alphabet().id("z");
    // Cover {S1,S2}: route u1,u3,u4 through vertex 1 and u2 through vertex 2,
    // rewriting both set labels to z.
    const Walk walk{0, 1, 4, 0, 2, 7, 0, 1, 5, 0, 1, 6};
    const auto w = make_witness(g, q.size(), walk, {LabelEdit{1, 1, z}, LabelEdit{2, 1, z}}, {});
    CHECK(verify_witness(g, q, w) == 2);
}

TEST_CASE("verify_witness rejects inconsistent certificates") {
    const auto g = sgtest::graph_of(sgtest::two_cycle_doc());
    const auto q = sgtest::query_of(g, "a b a");

    auto w = make_witness(g, q.size(), {0, 1, 0}, {}, {});
    SUBCASE("wrong spelled length") {
        const auto short_q = sgtest::query_of(g, "a b");
        CHECK_THROWS_AS(verify_witness(g, short_q, w), WitnessError);
    }
    SUBCASE("tampered mapping") {
        w.mapping[1] = {0, 1};
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
    }
    SUBCASE("edit that keeps the original symbol") {
        w.graph_edits.push_back({0, 1, 0});
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
    }
    SUBCASE("residual mismatch") {
        w.graph_edits.push_back({0, 1, 1});
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
    }
    SUBCASE("two edits on one cell") {
        w.graph_edits.push_back({0, 1, 1});
        w.graph_edits.push_back({0, 1, 1});
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
    }
    SUBCASE("edit targets outside the instance") {
        w.graph_edits.push_back({9, 1, 1});
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
        w.graph_edits.back() = {0, 5, 1};
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
        w.graph_edits.clear();
        w.query_edits.push_back({9, 1});
        CHECK_THROWS_AS(verify_witness(g, q, w), WitnessError);
    }
}

TEST_CASE("a revisited vertex keeps one label") {
    const auto g = sgtest::graph_of(sgtest::self_loop_doc());
    const auto q = sgtest::query_of(g, "a b");
    // Both positions land on the same cell with different demands.
    CHECK_THROWS_AS((void)materialize_restricted_witness(g, q, {0, 0}), WitnessError);
    const auto q2 = sgtest::query_of(g, "b b");
    const auto w = materialize_restricted_witness(g, q2, {0, 0});
    CHECK(verify_witness(g, q2, w) == 1); // one rewrite serves both visits
}

TEST_CASE("restrict_alphabet is the identity when every symbol occurs in the query") {
    const auto g = sgtest::graph_of(sgtest::self_loop_doc());
    const auto q = sgtest::query_of(g, "a a");
    const auto [g2, q2] = restrict_alphabet(g, q);
    CHECK(g2.alphabet().tokens() == std::vector<std::string>{"a"});
    CHECK(spell(g2, {0, 0}) == std::vector<SymbolId>{0, 0});
    CHECK(q2.size() == 2);
}

TEST_CASE("restrict_alphabet folds symbols missing from the query") {
    const auto g = parse_graph("sigma a b c d\nv 0 a,c\nv 1 d\ne 0 1\ne 1 0\n");
    const auto q = sgtest::query_of(g, "a b");
    const auto [g2, q2] = restrict_alphabet(g, q);
    // c and d collapse onto one sentinel; a and b survive.
    CHECK(g2.alphabet().size() <= q.size() + 1);
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edges() == g.edges());
    const auto folded = g2.label(1);
    CHECK(folded.size() == 1);
    CHECK(g2.alphabet().token(g2.label(0)[1]) == g2.alphabet().token(folded[0]));
}

TEST_CASE("restrict_alphabet preserves oracle answers") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.vertex_count = 5;
        spec.edge_probability = 0.45;
        spec.alphabet_size = 10;
        spec.max_label_len = 2;
        spec.query_length = 4;
        spec.seed = seed;
        const auto [g, q] = gen_instance(spec);
        const auto [g2, q2] = restrict_alphabet(g, q);
        CHECK(g2.alphabet().size() <= q.distinct_symbols().size() + 1);
        CHECK(oracle_compatible(g, q) == oracle_compatible(g2, q2));
        const auto a = oracle_min_edits_restricted(g, q);
        const auto b = oracle_min_edits_restricted(g2, q2);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(a->cost == b->cost);
    }
}

TEST_CASE("query documents round-trip") {
    const auto g = sgtest::graph_of(sgtest::cover_graph_doc());
    const auto q = sgtest::query_of(g, sgtest::cover_query_doc());
    CHECK(q.size() == 12);
    CHECK(serialize_query(q, g.alphabet()) == sgtest::cover_query_doc());
    CHECK_THROWS_AS((void)sgtest::query_of(g, "x0 nope"), ParseError);
    CHECK_THROWS_AS((void)sgtest::query_of(g, "\n"), ParseError);
    CHECK_THROWS_AS((void)sgtest::query_of(g, "x0 z\nx1\n"), ParseError); // two content lines
}

TEST_CASE("witness json round-trips and pins its schema") {
    const auto g = sgtest::graph_of(sgtest::two_cycle_doc());
    const auto q = sgtest::query_of(g, "b a");
    const auto w = make_witness(g, q.size(), {0, 1}, {LabelEdit{0, 1, 1}}, {QueryEdit{2, 1}});
    const std::string doc = witness_to_json(w, g);
    CHECK(doc == witness_to_json(w, g)); // serialization is stable
    CHECK(doc.find("\"format\": \"sgmatch-witness\"") != std::string::npos);
    CHECK(doc.find("\"cost\": 2") != std::string::npos);
    const auto back = witness_from_json(doc, g);
    CHECK(back == w);

    // A tampered cost no longer matches the edit lists.
    std::string bad = doc;
    bad.replace(bad.find("\"cost\": 2"), 9, "\"cost\": 7");
    CHECK_THROWS_AS((void)witness_from_json(bad, g), ParseError);
}

TEST_CASE("seeded rng streams are reproducible") {
    SplitMix64 a(42), b(42), c(43);
    bool diverged = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        CHECK(x == b.next());
        if (x != c.next()) diverged = true;
    }
    CHECK(diverged);
    SplitMix64 d(7);
    for (int i = 0; i < 100; ++i) CHECK(d.below(13) < 13);
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
}

} // TEST_SUITE
