#ifndef SGMATCH_IO_HPP
#define SGMATCH_IO_HPP

#include <string>
#include <string_view>

#include "sgmatch/graph.hpp"
#include "sgmatch/witness.hpp"

namespace sgmatch {

// Graph document grammar (line oriented, UTF-8, '#' starts a comment):
//   sigma <tok> <tok> ...          alphabet, first content line
//   v <id> <tok>[,<tok>...]        vertex label, ids must cover 0..n-1
//   e <src> <dst>                  directed edge
// Vertices may be declared in any order; the canonical serialization lists
// them by id and edges sorted by (src, dst).
LabeledGraph parse_graph(std::string_view text);
std::string serialize_graph(const LabeledGraph& graph);

// Query document: one content line of whitespace-separated tokens.
QueryString parse_query(std::string_view text, const Alphabet& alphabet);
std::string serialize_query(const QueryString& query, const Alphabet& alphabet);

// Witness documents are JSON with a fixed schema tag and key order; see
// README for the schema. Symbols are written as alphabet tokens.
std::string witness_to_json(const MatchWitness& witness, const LabeledGraph& graph);
MatchWitness witness_from_json(std::string_view text, const LabeledGraph& graph);

} // namespace sgmatch

#endif
