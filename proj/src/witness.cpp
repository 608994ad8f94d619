#include "sgmatch/witness.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sgmatch/errors.hpp"

namespace sgmatch {

std::vector<MapCell> canonical_mapping(const LabeledGraph& graph, const Walk& walk) {
    validate_walk(graph, walk);
    std::vector<MapCell> cells;
    cells.reserve(spelled_length(graph, walk));
    for (VertexId v : walk) {
        const auto len = static_cast<std::uint32_t>(graph.label_length(v));
        for (std::uint32_t off = 1; off <= len; ++off) cells.push_back({v, off});
    }
    return cells;
}

MatchWitness make_witness(const LabeledGraph& graph, std::size_t query_length, Walk walk,
                          std::vector<LabelEdit> graph_edits, std::vector<QueryEdit> query_edits) {
    MatchWitness w;
    w.mapping = canonical_mapping(graph, walk);
    if (w.mapping.size() != query_length)
        throw ValidationError("walk spells " + std::to_string(w.mapping.size()) +
                              " symbols, query has " + std::to_string(query_length));
    w.walk = std::move(walk);
    w.graph_edits = std::move(graph_edits);
    w.query_edits = std::move(query_edits);
    return w;
}

std::size_t verify_witness(const LabeledGraph& graph, const QueryString& query,
                           const MatchWitness& witness) {
    try {
        validate_walk(graph, witness.walk);
    } catch (const ValidationError& e) {
        throw WitnessError(e.what());
    }
    if (witness.mapping != canonical_mapping(graph, witness.walk))
        throw WitnessError("mapping is not the walk's unrolling");
    if (witness.mapping.size() != query.size())
        throw WitnessError("walk spells " + std::to_string(witness.mapping.size()) +
                           " symbols, query has " + std::to_string(query.size()));

    // Label edits: in range, at most one per (vertex, offset) cell.
    std::map<std::pair<VertexId, std::uint32_t>, SymbolId> rewrites;
    for (const LabelEdit& e : witness.graph_edits) {
        if (e.vertex >= graph.vertex_count()) throw WitnessError("label edit vertex out of range");
        if (e.offset == 0 || e.offset > graph.label_length(e.vertex))
            throw WitnessError("label edit offset out of range");
        if (e.symbol >= graph.alphabet().size()) throw WitnessError("label edit symbol out of range");
        if (e.symbol == graph.label(e.vertex)[e.offset - 1])
            throw WitnessError("label edit keeps the original symbol");
        if (!rewrites.emplace(std::make_pair(e.vertex, e.offset), e.symbol).second)
            throw WitnessError("two label edits target one cell");
    }
    std::vector<SymbolId> edited_query(query.symbols().begin(), query.symbols().end());
    std::vector<bool> query_touched(query.size(), false);
    for (const QueryEdit& e : witness.query_edits) {
        if (e.position == 0 || e.position > query.size())
            throw WitnessError("query edit position out of range");
        if (e.symbol >= graph.alphabet().size()) throw WitnessError("query edit symbol out of range");
        if (e.symbol == query.at(e.position))
            throw WitnessError("query edit keeps the original symbol");
        if (query_touched[e.position - 1]) throw WitnessError("two query edits target one position");
        query_touched[e.position - 1] = true;
        edited_query[e.position - 1] = e.symbol;
    }

    // Edited labels apply to every traversal of a vertex, so the walk spells
    // the edited query iff each mapped cell's effective symbol agrees.
    for (std::size_t i = 0; i < witness.mapping.size(); ++i) {
        const MapCell& cell = witness.mapping[i];
        SymbolId effective = graph.label(cell.vertex)[cell.offset - 1];
        auto it = rewrites.find({cell.vertex, cell.offset});
        if (it != rewrites.end()) effective = it->second;
        if (effective != edited_query[i])
            throw WitnessError("position " + std::to_string(i + 1) + " spells the wrong symbol");
    }
    return witness.cost();
}

MatchWitness materialize_restricted_witness(const LabeledGraph& graph, const QueryString& query,
                                            const Walk& walk) {
    std::vector<MapCell> mapping = canonical_mapping(graph, walk);
    if (mapping.size() != query.size())
        throw WitnessError("walk spells " + std::to_string(mapping.size()) + " symbols, query has " +
                           std::to_string(query.size()));
    // Each touched cell must be demanded one symbol by all positions mapped
    // onto it; revisits with conflicting demands have no label-edit witness.
    std::map<std::pair<VertexId, std::uint32_t>, SymbolId> demand;
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        const auto key = std::make_pair(mapping[i].vertex, mapping[i].offset);
        const SymbolId want = query.at(i + 1);
        auto [it, fresh] = demand.emplace(key, want);
        if (!fresh && it->second != want)
            throw WitnessError("conflicting demands on vertex " + std::to_string(key.first) +
                               " offset " + std::to_string(key.second));
    }
    std::vector<LabelEdit> edits;
    for (const auto& [cell, sym] : demand) {
        if (graph.label(cell.first)[cell.second - 1] != sym)
            edits.push_back({cell.first, cell.second, sym});
    }
    MatchWitness w;
    w.walk = walk;
    w.mapping = std::move(mapping);
    w.graph_edits = std::move(edits);
    return w;
}

} // namespace sgmatch
