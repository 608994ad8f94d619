#include "sgmatch/poly.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "sgmatch/errors.hpp"

namespace sgmatch {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

// Suffix table over (query position, label cell) states. best[i][cell] is the
// least number of substitutions needed to spell s[i..L] by finishing the
// cell's label and continuing along edges, ending exactly at a label end.
// Mismatch cost 1 covers every regime here: query-only edits are always
// independent, and label edits are independent when no cell repeats, which
// the DAG requirement guarantees for the label-editing modes.
struct SuffixTable {
    std::vector<std::size_t> cell_base; // vertex -> first cell id
    std::size_t cells = 0;
    std::vector<std::vector<std::uint32_t>> best; // [i][cell], i in 1..L+1

    SuffixTable(const LabeledGraph& graph, const QueryString& query, bool allow_mismatch) {
        const std::size_t n = graph.vertex_count();
        const std::size_t L = query.size();
        cell_base.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            cell_base[v] = cells;
            cells += graph.label_length(v);
        }
        best.assign(L + 2, std::vector<std::uint32_t>(cells, kInf));
        for (std::size_t i = L; i >= 1; --i) {
            for (VertexId v = 0; v < n; ++v) {
                const auto label = graph.label(v);
                for (std::size_t off = 1; off <= label.size(); ++off) {
                    const std::size_t cell = cell_base[v] + off - 1;
                    std::uint32_t step = (label[off - 1] == query.at(i)) ? 0 : 1;
                    if (step == 1 && !allow_mismatch) continue;
                    std::uint32_t rest = kInf;
                    if (off < label.size()) {
                        rest = (i == L) ? kInf : best[i + 1][cell + 1];
                    } else if (i == L) {
                        rest = 0;
                    } else {
                        for (VertexId u : graph.out_neighbors(v))
                            rest = std::min(rest, best[i + 1][cell_base[u]]);
                    }
                    if (rest < kInf) best[i][cell] = step + rest;
                }
            }
        }
    }

    // Lex-smallest optimal walk: smallest viable start vertex, then smallest
    // viable successor at each label boundary.
    std::optional<std::pair<Walk, std::uint32_t>> reconstruct(const LabeledGraph& graph,
                                                              const QueryString& query) const {
        const std::size_t L = query.size();
        std::uint32_t total = kInf;
        VertexId start = 0;
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            if (best[1][cell_base[v]] < total) {
                total = best[1][cell_base[v]];
                start = v;
            }
        }
        if (total >= kInf) return std::nullopt;
        Walk walk{start};
        VertexId v = start;
        std::size_t off = 1;
        for (std::size_t i = 1; i <= L; ++i) {
            const auto label = graph.label(v);
            const std::size_t cell = cell_base[v] + off - 1;
            const std::uint32_t step = (label[off - 1] == query.at(i)) ? 0 : 1;
            const std::uint32_t rest = best[i][cell] - step;
            if (off < label.size()) {
                ++off;
                continue;
            }
            if (i == L) break;
            for (VertexId u : graph.out_neighbors(v)) {
                if (best[i + 1][cell_base[u]] == rest) {
                    v = u;
                    break;
                }
            }
            walk.push_back(v);
            off = 1;
        }
        return std::make_pair(std::move(walk), total);
    }
};

MatchWitness witness_for_walk(const LabeledGraph& graph, const QueryString& query, Walk walk,
                              EditMode mode) {
    std::vector<LabelEdit> graph_edits;
    std::vector<QueryEdit> query_edits;
    std::size_t i = 1;
    for (VertexId v : walk) {
        const auto label = graph.label(v);
        for (std::uint32_t off = 1; off <= label.size(); ++off, ++i) {
            if (label[off - 1] == query.at(i)) continue;
            if (mode == EditMode::LabelsOnly)
                graph_edits.push_back({v, off, query.at(i)});
            else
                query_edits.push_back({static_cast<std::uint32_t>(i), label[off - 1]});
        }
    }
    return make_witness(graph, query.size(), std::move(walk), std::move(graph_edits),
                        std::move(query_edits));
}

} // namespace

DagCheck check_dag(const LabeledGraph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint32_t> indegree(n, 0);
    for (auto [src, dst] : graph.edges()) ++indegree[dst];
    // Min-heap keeps the order deterministic.
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    DagCheck out;
    out.topo_order.reserve(n);
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        out.topo_order.push_back(v);
        for (VertexId u : graph.out_neighbors(v))
            if (--indegree[u] == 0) ready.push(u);
    }
    out.is_dag = out.topo_order.size() == n;
    if (!out.is_dag) out.topo_order.clear();
    return out;
}

std::optional<MatchWitness> exact_match(const LabeledGraph& graph, const QueryString& query) {
    SuffixTable table(graph, query, /*allow_mismatch=*/false);
    auto found = table.reconstruct(graph, query);
    if (!found) return std::nullopt;
    return make_witness(graph, query.size(), std::move(found->first), {}, {});
}

std::optional<MatchWitness> min_edits_query_only(const LabeledGraph& graph,
                                                 const QueryString& query) {
    SuffixTable table(graph, query, /*allow_mismatch=*/true);
    auto found = table.reconstruct(graph, query);
    if (!found) return std::nullopt;
    return witness_for_walk(graph, query, std::move(found->first), EditMode::QueryOnly);
}

std::optional<MatchWitness> min_edits_dag(const LabeledGraph& graph, const QueryString& query,
                                          EditMode mode) {
    if (!check_dag(graph).is_dag)
        throw ValidationError("the dag matcher requires an acyclic graph");
    SuffixTable table(graph, query, /*allow_mismatch=*/true);
    auto found = table.reconstruct(graph, query);
    if (!found) return std::nullopt;
    return witness_for_walk(graph, query, std::move(found->first), mode);
}

} // namespace sgmatch
