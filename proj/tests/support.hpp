#ifndef SGMATCH_TEST_SUPPORT_HPP
#define SGMATCH_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "sgmatch/io.hpp"
#include "sgmatch/reductions.hpp"

namespace sgtest {

// Worked cover example used across suites: universe {u1..u4} with
// S1 = {u1,u3,u4}, S2 = {u2,u3}, S3 = {u2,u4}; minimum cover is {S1,S2}.
inline sgmatch::SetCoverInstance cover_instance() {
    return {4, {{0, 2, 3}, {1, 2}, {1, 3}}};
}

// Its reduction target, frozen as text: source vertex 0, one vertex per set,
// one per set element, cycles set-vertex -> element -> source.
inline const char* cover_graph_doc() {
    return R"(sigma x0 z x1 x2 x3 y1 y2 y3 y4
v 0 x0
v 1 x1
v 2 x2
v 3 x3
v 4 y1
v 5 y3
v 6 y4
v 7 y2
v 8 y3
v 9 y2
v 10 y4
e 0 1
e 0 2
e 0 3
e 1 4
e 1 5
e 1 6
e 2 7
e 2 8
e 3 9
e 3 10
e 4 0
e 5 0
e 6 0
e 7 0
e 8 0
e 9 0
e 10 0
)";
}

inline const char* cover_query_doc() { return "x0 z y1 x0 z y2 x0 z y3 x0 z y4\n"; }

inline const char* two_cycle_doc() { return "sigma a b\nv 0 a\nv 1 b\ne 0 1\ne 1 0\n"; }

inline const char* self_loop_doc() { return "sigma a b\nv 0 a\ne 0 0\n"; }

inline sgmatch::LabeledGraph graph_of(const char* doc) { return sgmatch::parse_graph(doc); }

inline std::vector<sgmatch::SymbolId> label_vec(const sgmatch::LabeledGraph& g,
                                                sgmatch::VertexId v) {
    const auto span = g.label(v);
    return {span.begin(), span.end()};
}

inline sgmatch::QueryString query_of(const sgmatch::LabeledGraph& g, const char* doc) {
    return sgmatch::parse_query(doc, g.alphabet());
}

} // namespace sgtest

#endif
