#ifndef SGMATCH_RESTRICT_HPP
#define SGMATCH_RESTRICT_HPP

#include <utility>

#include "sgmatch/graph.hpp"

namespace sgmatch {

// Shrinks the instance alphabet to the symbols occurring in the query plus at
// most one sentinel: every graph-label symbol absent from the query collapses
// onto the lowest such symbol, and the alphabet is rebuilt in original
// declaration order. The effective alphabet size is then at most |s| + 1.
// Every solver's decision and minimum-cost answer is preserved exactly: cells
// that matched a query position still match it, and cells that matched none
// still match none.
std::pair<LabeledGraph, QueryString> restrict_alphabet(const LabeledGraph& graph,
                                                       const QueryString& query);

} // namespace sgmatch

#endif
