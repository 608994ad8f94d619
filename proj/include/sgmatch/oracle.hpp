#ifndef SGMATCH_ORACLE_HPP
#define SGMATCH_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgmatch/graph.hpp"
#include "sgmatch/plain_graph.hpp"
#include "sgmatch/poly.hpp"
#include "sgmatch/witness.hpp"

namespace sgmatch {

// Exhaustive reference implementations. Deliberately simple search with
// branch-and-bound pruning; every answer is derivable by inspection of the
// recursion. Budget counts explored search nodes, not instance size, so big
// instances still run as long as pruning bites. Exceeding it throws
// BudgetError rather than returning a wrong answer.
struct OracleOptions {
    uint64_t node_budget = 100'000'000;
};

// Visits every walk whose spelled length is exactly `spelled_length`, in
// lexicographic walk order. Callback may return false to stop early.
void for_each_walk(const LabeledGraph& graph, std::size_t spelled_length,
                   const std::function<bool(const Walk&)>& visit,
                   const OracleOptions& opts = {});

std::vector<Walk> enumerate_walks(const LabeledGraph& graph,
                                  std::size_t spelled_length,
                                  const OracleOptions& opts = {});

// Compatibility: some walk w with |sigma(w)| = |s| admits per-vertex label
// rewrites making sigma(w) = s, each revisited vertex rewritten once,
// consistently. Unbounded edit count.
bool oracle_compatible(const LabeledGraph& graph, const QueryString& query,
                       const OracleOptions& opts = {});

struct OracleCost {
    std::size_t cost = 0;
    Walk walk; // lexicographically smallest optimal walk
};

// Minimum edit variants; nullopt when no walk has the right spelled length.
// Restricted: graph-side edits only, revisits must agree (compat with a
// budget). Both: graph edits plus query edits, revisit-consistent. QueryOnly:
// exhaustive counterpart of the polynomial matcher.
std::optional<OracleCost> oracle_min_edits_restricted(const LabeledGraph& graph,
                                                      const QueryString& query,
                                                      const OracleOptions& opts = {});
std::optional<OracleCost> oracle_min_edits_both(const LabeledGraph& graph,
                                                const QueryString& query,
                                                const OracleOptions& opts = {});
std::optional<OracleCost> oracle_min_edits_query_only(const LabeledGraph& graph,
                                                      const QueryString& query,
                                                      const OracleOptions& opts = {});

// Builds a full witness for a Both-mode optimal walk: label edits where the
// walk demands a consistent rewrite, query edits where demands conflict.
MatchWitness materialize_both_witness(const LabeledGraph& graph,
                                      const QueryString& query,
                                      const Walk& walk);

// Simple path on exactly h distinct vertices; lexicographically smallest if
// one exists.
std::optional<std::vector<uint32_t>> oracle_hpath(const PlainGraph& graph,
                                                  uint32_t h,
                                                  const OracleOptions& opts = {});

// Smallest family of set indices covering the universe; lexicographically
// smallest index vector among minimum covers. Nullopt when no cover exists.
std::optional<std::vector<uint32_t>> oracle_set_cover(
    uint32_t universe_size, const std::vector<std::vector<uint32_t>>& sets,
    const OracleOptions& opts = {});

} // namespace sgmatch

#endif
