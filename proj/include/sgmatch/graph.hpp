#ifndef SGMATCH_GRAPH_HPP
#define SGMATCH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sgmatch/alphabet.hpp"

namespace sgmatch {

using VertexId = std::uint32_t;
using Label = std::vector<SymbolId>;

// A walk is a vertex sequence whose consecutive pairs are edges; vertices may
// repeat. Validity against a concrete graph is checked by validate_walk.
using Walk = std::vector<VertexId>;

// Directed graph with a nonempty symbol string attached to every vertex.
// Immutable after construction; edges are stored sorted and duplicate-free
// (self-loops allowed).
class LabeledGraph {
public:
    LabeledGraph(Alphabet alphabet, std::vector<Label> labels,
                 std::vector<std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const SymbolId> label(VertexId v) const;
    std::size_t label_length(VertexId v) const { return labels_[v].size(); }
    // Sum of all label lengths (the spelled length of a walk visiting every
    // vertex once).
    std::size_t total_label_length() const { return total_label_length_; }
    bool unit_labels() const;

    std::span<const VertexId> out_neighbors(VertexId v) const;
    std::span<const VertexId> in_neighbors(VertexId v) const;
    bool has_edge(VertexId src, VertexId dst) const;
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    bool structurally_equal(const LabeledGraph& other) const;

private:
    Alphabet alphabet_;
    std::vector<Label> labels_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::size_t total_label_length_ = 0;
};

// Query pattern over the graph's alphabet. Positions are 1-based, matching
// the usual s[i] convention; length is at least 1.
class QueryString {
public:
    explicit QueryString(std::vector<SymbolId> symbols);

    std::size_t size() const { return symbols_.size(); }
    // 1-based access; position must lie in [1, size()].
    SymbolId at(std::size_t position) const;
    std::span<const SymbolId> symbols() const { return symbols_; }

    // Distinct symbols, ascending by id.
    std::vector<SymbolId> distinct_symbols() const;

    bool operator==(const QueryString& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<SymbolId> symbols_;
};

// Throws ValidationError unless every consecutive pair of walk vertices is an
// edge and every vertex index is in range. The empty walk is rejected.
void validate_walk(const LabeledGraph& graph, const Walk& walk);

// Concatenation of the labels along the walk (the string the walk spells).
std::vector<SymbolId> spell(const LabeledGraph& graph, const Walk& walk);

std::size_t spelled_length(const LabeledGraph& graph, const Walk& walk);

} // namespace sgmatch

#endif
