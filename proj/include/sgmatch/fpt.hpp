#ifndef SGMATCH_FPT_HPP
#define SGMATCH_FPT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sgmatch/graph.hpp"
#include "sgmatch/witness.hpp"

namespace sgmatch {

// Color-coding decider for compatibility on unit-label graphs. A walk using
// exactly k distinct vertices is found by coloring vertices with k colors,
// guessing the symbol each color rewrites to, and running a reachability DP
// over (query position, vertex). Deterministic mode enumerates a perfect
// family; Monte Carlo mode samples colorings until the error bound holds.

enum class FptMode : uint8_t {
    Deterministic,
    MonteCarlo,
};

struct FptConfig {
    FptMode mode = FptMode::Deterministic;
    double delta = 0.01;       // MC: P(miss a yes-instance) < delta
    uint64_t seed = 0;         // MC coloring stream
    uint64_t trial_budget = 0; // 0 = unlimited; else cap on DP trials, BudgetError when
                               // exhausted without a definite answer
    unsigned workers = 1;      // >1 runs trial blocks on a thread pool
};

struct Coloring {
    std::vector<uint32_t> assignment; // vertex -> color in 0..k-1
    uint32_t k = 0;
};

// r-function: color -> query symbol, encoded by index into the query's
// distinct-symbol list.
using RFunction = std::vector<uint32_t>;

class ColoringFamily {
public:
    // Perfect family: for every k-subset of vertices some member colors it
    // with k distinct colors. One coloring per subset keeps the family at
    // C(|V|, k) instead of k^|V|; k = 1 collapses to one all-same coloring.
    static ColoringFamily deterministic(uint32_t vertex_count, uint32_t k);
    // ceil(e^k * ln(1/delta)) independent uniform colorings.
    static ColoringFamily randomized(uint32_t vertex_count, uint32_t k,
                                     double delta, uint64_t seed);

    std::size_t size() const { return size_; }
    Coloring at(std::size_t index) const;

private:
    ColoringFamily() = default;
    uint32_t vertex_count_ = 0;
    uint32_t k_ = 0;
    std::size_t size_ = 0;
    bool randomized_ = false;
    uint64_t seed_ = 0;
};

std::size_t randomized_family_size(uint32_t k, double delta);
std::size_t deterministic_family_size(uint32_t vertex_count, uint32_t k);

// One DP run: is there a walk spelling the query when every vertex of color c
// reads as r[c]? r maps colors to indices into query.distinct_symbols().
// Returns a back-pointer-reconstructed walk, or nullopt. Requires unit labels.
std::optional<Walk> dp_compatible_under(const LabeledGraph& graph, const QueryString& query,
                                        const Coloring& coloring, const RFunction& r);

// The full reachability table; row i-1 holds M[i][v]. Reference shape for
// property checks, not the engine's hot path.
std::vector<std::vector<char>> dp_table(const LabeledGraph& graph, const QueryString& query,
                                        const Coloring& coloring, const RFunction& r);

enum class FptAnswer : uint8_t {
    Yes,
    No,         // deterministic certainty
    ProbablyNo, // MC: no trial succeeded, P(wrong) < delta
};

struct FptResult {
    FptAnswer answer = FptAnswer::No;
    // Canonical trial count: index of the first successful trial plus one, or
    // every planned trial on no. Independent of worker count by construction.
    uint64_t trials_run = 0;
    uint32_t witness_k = 0;           // on Yes: distinct vertices in the walk
    std::optional<Walk> witness_walk; // on Yes: verified walk
};

// Tries k = 1..min(|s|, |V|). Yes answers carry a verified walk witness.
// Throws ValidationError unless the graph has unit labels.
FptResult fpt_compatible(const LabeledGraph& graph, const QueryString& query,
                         const FptConfig& config = {});

} // namespace sgmatch

#endif
