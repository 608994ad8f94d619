#ifndef SGMATCH_POLY_HPP
#define SGMATCH_POLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sgmatch/graph.hpp"
#include "sgmatch/witness.hpp"

namespace sgmatch {

// Which side of the instance may receive substitutions.
enum class EditMode : uint8_t {
    QueryOnly,
    LabelsOnly,
    Both,
};

struct DagCheck {
    bool is_dag = false;
    // Filled iff is_dag; u precedes v whenever (u,v) is an edge.
    std::vector<VertexId> topo_order;
};

DagCheck check_dag(const LabeledGraph& graph);

// Exact occurrence: a walk spelling the query verbatim. Returns the witness
// with the lexicographically smallest walk, or nullopt. Polynomial via a
// suffix table over (position, vertex, offset) states.
std::optional<MatchWitness> exact_match(const LabeledGraph& graph,
                                        const QueryString& query);

// Minimum query-side substitutions over all walks of total label length |s|.
// Polynomial on arbitrary graphs: cost of a state never depends on which
// query symbols were already rewritten.
std::optional<MatchWitness> min_edits_query_only(const LabeledGraph& graph,
                                                 const QueryString& query);

// Minimum substitutions on DAGs, any mode. A walk in a DAG never revisits a
// vertex, so label edits are independent per step, the same suffix table
// covers all three regimes, and the costs coincide; only the witness's edit
// placement differs. Throws ValidationError when the graph has a cycle.
std::optional<MatchWitness> min_edits_dag(const LabeledGraph& graph,
                                          const QueryString& query,
                                          EditMode mode);

} // namespace sgmatch

#endif
