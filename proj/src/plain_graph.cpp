#include "sgmatch/plain_graph.hpp"

#include <algorithm>
#include <string>

#include "sgmatch/errors.hpp"

namespace sgmatch {

PlainGraph::PlainGraph(uint32_t vertex_count, std::vector<std::pair<uint32_t, uint32_t>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ == 0) throw ValidationError("plain graph must have at least one vertex");
    for (auto [src, dst] : edges_) {
        if (src >= vertex_count_ || dst >= vertex_count_)
            throw ValidationError("edge endpoint out of range: " + std::to_string(src) + " -> " +
                                  std::to_string(dst));
        if (src == dst) throw ValidationError("self-loop on vertex " + std::to_string(src));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_offsets_.assign(vertex_count_ + 1, 0);
    for (auto [src, dst] : edges_) ++adj_offsets_[src + 1];
    for (std::size_t v = 1; v <= vertex_count_; ++v) adj_offsets_[v] += adj_offsets_[v - 1];
    adj_.resize(edges_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (auto [src, dst] : edges_) adj_[cursor[src]++] = dst;
}

std::span<const uint32_t> PlainGraph::out_neighbors(uint32_t v) const {
    if (v >= vertex_count_) throw ValidationError("vertex id out of range");
    return std::span<const uint32_t>(adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]);
}

bool PlainGraph::has_edge(uint32_t src, uint32_t dst) const {
    if (src >= vertex_count_) return false;
    auto nbrs = out_neighbors(src);
    return std::binary_search(nbrs.begin(), nbrs.end(), dst);
}

} // namespace sgmatch
