#include "sgmatch/graph.hpp"

#include <algorithm>
#include <string>

#include "sgmatch/errors.hpp"

namespace sgmatch {

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<Label> labels,
                           std::vector<std::pair<VertexId, VertexId>> edges)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)), edges_(std::move(edges)) {
    if (labels_.empty()) throw ValidationError("graph must have at least one vertex");
    const std::size_t n = labels_.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (labels_[v].empty())
            throw ValidationError("vertex " + std::to_string(v) + " has an empty label");
        for (SymbolId sym : labels_[v]) {
            if (sym >= alphabet_.size())
                throw ValidationError("vertex " + std::to_string(v) + " label uses unknown symbol id");
        }
        total_label_length_ += labels_[v].size();
    }
    for (auto [src, dst] : edges_) {
        if (src >= n || dst >= n)
            throw ValidationError("edge endpoint out of range: " + std::to_string(src) + " -> " +
                                  std::to_string(dst));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    out_.resize(n);
    in_.resize(n);
    for (auto [src, dst] : edges_) {
        out_[src].push_back(dst);
        in_[dst].push_back(src);
    }
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const SymbolId> LabeledGraph::label(VertexId v) const {
    if (v >= labels_.size()) throw ValidationError("vertex id out of range");
    return labels_[v];
}

bool LabeledGraph::unit_labels() const { return total_label_length_ == labels_.size(); }

std::span<const VertexId> LabeledGraph::out_neighbors(VertexId v) const {
    if (v >= out_.size()) throw ValidationError("vertex id out of range");
    return out_[v];
}

std::span<const VertexId> LabeledGraph::in_neighbors(VertexId v) const {
    if (v >= in_.size()) throw ValidationError("vertex id out of range");
    return in_[v];
}

bool LabeledGraph::has_edge(VertexId src, VertexId dst) const {
    if (src >= out_.size()) return false;
    const auto& nbrs = out_[src];
    return std::binary_search(nbrs.begin(), nbrs.end(), dst);
}

bool LabeledGraph::structurally_equal(const LabeledGraph& other) const {
    return alphabet_ == other.alphabet_ && labels_ == other.labels_ && edges_ == other.edges_;
}

QueryString::QueryString(std::vector<SymbolId> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ValidationError("query must be nonempty");
}

SymbolId QueryString::at(std::size_t position) const {
    if (position == 0 || position > symbols_.size())
        throw ValidationError("query position out of range: " + std::to_string(position));
    return symbols_[position - 1];
}

std::vector<SymbolId> QueryString::distinct_symbols() const {
    std::vector<SymbolId> out(symbols_.begin(), symbols_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate_walk(const LabeledGraph& graph, const Walk& walk) {
    if (walk.empty()) throw ValidationError("walk must be nonempty");
    for (VertexId v : walk) {
        if (v >= graph.vertex_count())
            throw ValidationError("walk vertex out of range: " + std::to_string(v));
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (!graph.has_edge(walk[i], walk[i + 1]))
            throw ValidationError("walk step is not an edge: " + std::to_string(walk[i]) + " -> " +
                                  std::to_string(walk[i + 1]));
    }
}

std::vector<SymbolId> spell(const LabeledGraph& graph, const Walk& walk) {
    validate_walk(graph, walk);
    std::vector<SymbolId> out;
    out.reserve(spelled_length(graph, walk));
    for (VertexId v : walk) {
        auto lab = graph.label(v);
        out.insert(out.end(), lab.begin(), lab.end());
    }
    return out;
}

std::size_t spelled_length(const LabeledGraph& graph, const Walk& walk) {
    std::size_t total = 0;
    for (VertexId v : walk) total += graph.label_length(v);
    return total;
}

} // namespace sgmatch
