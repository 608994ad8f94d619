#ifndef SGMATCH_PLAIN_GRAPH_HPP
#define SGMATCH_PLAIN_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sgmatch {

// Unlabeled directed graph used as reduction source material. Vertices are
// 0..n-1; edges are deduplicated and sorted; self-loops are rejected because
// they never help a simple path.
class PlainGraph {
public:
    PlainGraph(uint32_t vertex_count,
               std::vector<std::pair<uint32_t, uint32_t>> edges);

    uint32_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const uint32_t> out_neighbors(uint32_t v) const;
    const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }
    bool has_edge(uint32_t src, uint32_t dst) const;

private:
    uint32_t vertex_count_ = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges_;
    std::vector<uint32_t> adj_;
    std::vector<std::size_t> adj_offsets_;
};

} // namespace sgmatch

#endif
