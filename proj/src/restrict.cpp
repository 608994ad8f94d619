#include "sgmatch/restrict.hpp"

#include <optional>
#include <unordered_map>

namespace sgmatch {

std::pair<LabeledGraph, QueryString> restrict_alphabet(const LabeledGraph& graph,
                                                       const QueryString& query) {
    const Alphabet& old_alpha = graph.alphabet();
    std::vector<bool> in_query(old_alpha.size(), false);
    for (SymbolId sym : query.symbols()) in_query[sym] = true;

    // Query symbols keep their identity; every other label symbol collapses
    // onto one sentinel that itself stays outside the query, so a cell that
    // mismatched every query position still does. Aliasing those cells onto a
    // query symbol instead would manufacture free matches and lower edit
    // costs. The sentinel is the first non-query symbol used by any label.
    std::optional<SymbolId> sentinel;
    for (VertexId v = 0; v < graph.vertex_count() && !sentinel; ++v)
        for (SymbolId sym : graph.label(v))
            if (!in_query[sym]) {
                SymbolId lowest = sym;
                for (VertexId u = 0; u < graph.vertex_count(); ++u)
                    for (SymbolId other : graph.label(u))
                        if (!in_query[other] && other < lowest) lowest = other;
                sentinel = lowest;
                break;
            }

    std::vector<std::string> tokens;
    std::unordered_map<SymbolId, SymbolId> remap;
    for (SymbolId sym = 0; sym < old_alpha.size(); ++sym) {
        if (!in_query[sym] && (!sentinel || sym != *sentinel)) continue;
        remap[sym] = static_cast<SymbolId>(tokens.size());
        tokens.push_back(old_alpha.token(sym));
    }

    std::vector<Label> labels(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        labels[v].reserve(graph.label_length(v));
        for (SymbolId sym : graph.label(v)) {
            auto it = remap.find(sym);
            labels[v].push_back(it != remap.end() ? it->second : remap.at(*sentinel));
        }
    }
    std::vector<SymbolId> qsyms;
    qsyms.reserve(query.size());
    for (SymbolId sym : query.symbols()) qsyms.push_back(remap.at(sym));

    return {LabeledGraph(Alphabet(std::move(tokens)), std::move(labels), graph.edges()),
            QueryString(std::move(qsyms))};
}

} // namespace sgmatch
