#ifndef SGMATCH_GENERATE_HPP
#define SGMATCH_GENERATE_HPP

#include <cstdint>
#include <utility>

#include "sgmatch/graph.hpp"

namespace sgmatch {

enum class InstanceShape : uint8_t {
    General,    // arbitrary edges, labels up to max_label_len
    Dag,        // edges only from lower to higher vertex id
    UnitLabels, // every label one symbol
};

struct GenSpec {
    InstanceShape shape = InstanceShape::General;
    uint32_t vertex_count = 8;
    double edge_probability = 0.25; // per ordered pair (u < v for Dag shape)
    uint32_t alphabet_size = 4;
    uint32_t max_label_len = 3;    // ignored for UnitLabels
    uint32_t query_length = 6;
    bool plant_match = false;      // embed a walk spelling the query
    uint64_t seed = 0;
};

// Deterministic in (spec, seed): same inputs give byte-identical instances on
// every platform. Query symbols are drawn from the same alphabet.
std::pair<LabeledGraph, QueryString> gen_instance(const GenSpec& spec);

} // namespace sgmatch

#endif
