#ifndef SGMATCH_WITNESS_HPP
#define SGMATCH_WITNESS_HPP

#include <cstdint>
#include <vector>

#include "sgmatch/graph.hpp"

namespace sgmatch {

// Substitution of one symbol inside a vertex label. Offsets are 1-based
// within the label.
struct LabelEdit {
    VertexId vertex = 0;
    std::uint32_t offset = 1;
    SymbolId symbol = 0;

    bool operator==(const LabelEdit&) const = default;
};

// Substitution of one query position. Positions are 1-based.
struct QueryEdit {
    std::uint32_t position = 1;
    SymbolId symbol = 0;

    bool operator==(const QueryEdit&) const = default;
};

// Where query position i landed: the j-th symbol of vertex's label.
struct MapCell {
    VertexId vertex = 0;
    std::uint32_t offset = 1;

    bool operator==(const MapCell&) const = default;
};

// Machine-checkable certificate that a walk matches the query at a claimed
// cost. The mapping is the left-to-right unrolling of the walk's labels;
// graph edits apply to labels (and therefore to every revisit of a vertex),
// query edits to query positions. Total cost is the number of listed edits.
struct MatchWitness {
    Walk walk;
    std::vector<MapCell> mapping; // index = position - 1
    std::vector<LabelEdit> graph_edits;
    std::vector<QueryEdit> query_edits;

    std::size_t cost() const { return graph_edits.size() + query_edits.size(); }

    bool operator==(const MatchWitness&) const = default;
};

// The unrolling of a walk: cell for each spelled position, in order.
std::vector<MapCell> canonical_mapping(const LabeledGraph& graph, const Walk& walk);

// Builds a witness with the canonical mapping. Throws ValidationError if the
// walk is invalid or its spelled length differs from query_length.
MatchWitness make_witness(const LabeledGraph& graph, std::size_t query_length, Walk walk,
                          std::vector<LabelEdit> graph_edits, std::vector<QueryEdit> query_edits);

// Ground-truth checker. Verifies every witness invariant (walk validity,
// spelled length, canonical mapping, edit well-formedness, revisit
// consistency, and that the edited walk spells the edited query) and returns
// the cost k = |graph_edits| + |query_edits|. Throws WitnessError otherwise.
std::size_t verify_witness(const LabeledGraph& graph, const QueryString& query,
                           const MatchWitness& witness);

// Turns a walk into a label-edits-only witness: every (vertex, offset) the
// walk touches must be demanded a single symbol by the positions mapped
// there; demanded symbols differing from the original label become edits.
// Throws WitnessError when two positions demand different symbols at one
// label cell (the walk is not compatible with the query).
MatchWitness materialize_restricted_witness(const LabeledGraph& graph, const QueryString& query,
                                            const Walk& walk);

} // namespace sgmatch

#endif
