#include "sgmatch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "sgmatch/errors.hpp"

namespace sgmatch {

namespace {

constexpr SymbolId kNoDemand = std::numeric_limits<SymbolId>::max();

// feasible[r][v]: some walk starting at v spells exactly r symbols.
std::vector<std::vector<char>> feasible_table(const LabeledGraph& graph, std::size_t length) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<char>> feasible(length + 1, std::vector<char>(n, 0));
    for (std::size_t r = 1; r <= length; ++r) {
        for (VertexId v = 0; v < n; ++v) {
            const std::size_t len = graph.label_length(v);
            if (len > r) continue;
            if (len == r) {
                feasible[r][v] = 1;
                continue;
            }
            for (VertexId u : graph.out_neighbors(v)) {
                if (feasible[r - len][u]) {
                    feasible[r][v] = 1;
                    break;
                }
            }
        }
    }
    return feasible;
}

struct SearchCtx {
    const LabeledGraph& graph;
    std::size_t length;
    std::vector<std::vector<char>> feasible;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    Walk walk;

    SearchCtx(const LabeledGraph& g, std::size_t len, const OracleOptions& opts)
        : graph(g), length(len), feasible(feasible_table(g, len)), budget(opts.node_budget) {}
};

// Depth-first over walks in lexicographic order; pos is the query offset
// where v's label starts. push() may refuse a subtree; complete() may abort
// the whole search by returning false.
template <class Policy>
bool dfs(SearchCtx& ctx, Policy& pol, VertexId v, std::size_t pos) {
    if (++ctx.nodes > ctx.budget)
        throw BudgetError("walk search passed " + std::to_string(ctx.budget) + " nodes");
    if (!pol.push(v, pos)) return true;
    ctx.walk.push_back(v);
    const std::size_t npos = pos + ctx.graph.label_length(v);
    bool keep_going = true;
    if (npos == ctx.length) {
        keep_going = pol.complete(ctx.walk);
    } else {
        for (VertexId u : ctx.graph.out_neighbors(v)) {
            if (!ctx.feasible[ctx.length - npos][u]) continue;
            if (!dfs(ctx, pol, u, npos)) {
                keep_going = false;
                break;
            }
        }
    }
    ctx.walk.pop_back();
    pol.pop(v, pos);
    return keep_going;
}

template <class Policy>
void search(const LabeledGraph& graph, std::size_t length, const OracleOptions& opts, Policy& pol) {
    if (length == 0) return;
    SearchCtx ctx(graph, length, opts);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (!ctx.feasible[length][v]) continue;
        if (!dfs(ctx, pol, v, 0)) return;
    }
}

struct VisitPolicy {
    const std::function<bool(const Walk&)>& visit;
    bool push(VertexId, std::size_t) { return true; }
    void pop(VertexId, std::size_t) {}
    bool complete(const Walk& walk) { return visit(walk); }
};

// Label-edits-only search. A walk admits a restricted witness iff all query
// positions mapped onto one label cell demand the same symbol; its cost is
// the number of demanded cells that differ from the original label.
struct RestrictedPolicy {
    const LabeledGraph& graph;
    const QueryString& query;
    bool stop_on_first = false;

    std::vector<std::size_t> cell_base;
    std::vector<SymbolId> demand;
    std::vector<std::uint32_t> set_cells;
    std::vector<std::uint32_t> frame_sizes;
    std::size_t cost = 0;

    bool found = false;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    Walk best_walk;

    RestrictedPolicy(const LabeledGraph& g, const QueryString& q, bool first_only)
        : graph(g), query(q), stop_on_first(first_only) {
        cell_base.resize(g.vertex_count());
        std::size_t base = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            cell_base[v] = base;
            base += g.label_length(v);
        }
        demand.assign(base, kNoDemand);
    }

    bool push(VertexId v, std::size_t pos) {
        const auto label = graph.label(v);
        std::uint32_t set_here = 0;
        for (std::size_t j = 0; j < label.size(); ++j) {
            const auto cell = static_cast<std::uint32_t>(cell_base[v] + j);
            const SymbolId want = query.at(pos + j + 1);
            if (demand[cell] == kNoDemand) {
                demand[cell] = want;
                set_cells.push_back(cell);
                ++set_here;
                if (want != label[j]) ++cost;
            } else if (demand[cell] != want) {
                unwind(set_here);
                return false;
            }
        }
        if (!stop_on_first && cost >= best_cost) {
            unwind(set_here);
            return false;
        }
        frame_sizes.push_back(set_here);
        return true;
    }

    void pop(VertexId, std::size_t) {
        unwind(frame_sizes.back());
        frame_sizes.pop_back();
    }

    bool complete(const Walk& walk) {
        if (stop_on_first) {
            found = true;
            return false;
        }
        if (cost < best_cost) {
            best_cost = cost;
            best_walk = walk;
        }
        return true;
    }

private:
    void unwind(std::uint32_t count) {
        for (std::uint32_t i = 0; i < count; ++i) {
            const std::uint32_t cell = set_cells.back();
            set_cells.pop_back();
            const VertexId v = owner_of(cell);
            if (demand[cell] != graph.label(v)[cell - cell_base[v]]) --cost;
            demand[cell] = kNoDemand;
        }
    }

    VertexId owner_of(std::uint32_t cell) const {
        auto it = std::upper_bound(cell_base.begin(), cell_base.end(), cell);
        return static_cast<VertexId>(std::distance(cell_base.begin(), it) - 1);
    }
};

// Cheapest way to satisfy one label cell: either keep the original symbol and
// edit every disagreeing query position, or spend one label edit on some
// demanded symbol and edit the rest. Adding a demand never lowers the cost,
// so partial walk costs are lower bounds.
std::size_t cell_cost(SymbolId original, const std::vector<SymbolId>& demands) {
    std::size_t keep = 0;
    for (SymbolId d : demands)
        if (d != original) ++keep;
    std::size_t best = keep;
    for (SymbolId x : demands) {
        if (x == original) continue;
        std::size_t c = 1;
        for (SymbolId d : demands)
            if (d != x) ++c;
        best = std::min(best, c);
    }
    return best;
}

struct BothPolicy {
    const LabeledGraph& graph;
    const QueryString& query;

    std::vector<std::size_t> cell_base;
    std::unordered_map<std::uint32_t, std::vector<SymbolId>> demands;
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> frame_sizes;
    std::size_t cost = 0;

    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    Walk best_walk;

    BothPolicy(const LabeledGraph& g, const QueryString& q) : graph(g), query(q) {
        cell_base.resize(g.vertex_count());
        std::size_t base = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            cell_base[v] = base;
            base += g.label_length(v);
        }
    }

    SymbolId original_of(std::uint32_t cell) const {
        auto it = std::upper_bound(cell_base.begin(), cell_base.end(), cell);
        const auto v = static_cast<VertexId>(std::distance(cell_base.begin(), it) - 1);
        return graph.label(v)[cell - cell_base[v]];
    }

    bool push(VertexId v, std::size_t pos) {
        const auto label = graph.label(v);
        for (std::size_t j = 0; j < label.size(); ++j) {
            const auto cell = static_cast<std::uint32_t>(cell_base[v] + j);
            auto& vec = demands[cell];
            const std::size_t before = cell_cost(label[j], vec);
            vec.push_back(query.at(pos + j + 1));
            cost += cell_cost(label[j], vec) - before;
            touched.push_back(cell);
        }
        if (cost >= best_cost) {
            unwind(static_cast<std::uint32_t>(label.size()));
            return false;
        }
        frame_sizes.push_back(static_cast<std::uint32_t>(label.size()));
        return true;
    }

    void pop(VertexId, std::size_t) {
        unwind(frame_sizes.back());
        frame_sizes.pop_back();
    }

    bool complete(const Walk& walk) {
        if (cost < best_cost) {
            best_cost = cost;
            best_walk = walk;
        }
        return true;
    }

private:
    void unwind(std::uint32_t count) {
        for (std::uint32_t i = 0; i < count; ++i) {
            const std::uint32_t cell = touched.back();
            touched.pop_back();
            auto& vec = demands[cell];
            const SymbolId original = original_of(cell);
            const std::size_t before = cell_cost(original, vec);
            vec.pop_back();
            cost -= before - cell_cost(original, vec);
            if (vec.empty()) demands.erase(cell);
        }
    }
};

struct QueryOnlyPolicy {
    const LabeledGraph& graph;
    const QueryString& query;
    std::size_t cost = 0;

    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    Walk best_walk;

    std::size_t frame_cost(VertexId v, std::size_t pos) const {
        const auto label = graph.label(v);
        std::size_t c = 0;
        for (std::size_t j = 0; j < label.size(); ++j)
            if (label[j] != query.at(pos + j + 1)) ++c;
        return c;
    }

    bool push(VertexId v, std::size_t pos) {
        const std::size_t add = frame_cost(v, pos);
        if (cost + add >= best_cost) return false;
        cost += add;
        return true;
    }

    void pop(VertexId v, std::size_t pos) { cost -= frame_cost(v, pos); }

    bool complete(const Walk& walk) {
        if (cost < best_cost) {
            best_cost = cost;
            best_walk = walk;
        }
        return true;
    }
};

template <class Policy>
std::optional<OracleCost> run_min_search(const LabeledGraph& graph, const QueryString& query,
                                         const OracleOptions& opts, Policy& pol) {
    search(graph, query.size(), opts, pol);
    if (pol.best_cost == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return OracleCost{pol.best_cost, std::move(pol.best_walk)};
}

} // namespace

void for_each_walk(const LabeledGraph& graph, std::size_t spelled_length,
                   const std::function<bool(const Walk&)>& visit, const OracleOptions& opts) {
    VisitPolicy pol{visit};
    search(graph, spelled_length, opts, pol);
}

std::vector<Walk> enumerate_walks(const LabeledGraph& graph, std::size_t spelled_length,
                                  const OracleOptions& opts) {
    std::vector<Walk> out;
    for_each_walk(
        graph, spelled_length,
        [&](const Walk& w) {
            out.push_back(w);
            return true;
        },
        opts);
    return out;
}

bool oracle_compatible(const LabeledGraph& graph, const QueryString& query,
                       const OracleOptions& opts) {
    RestrictedPolicy pol(graph, query, /*first_only=*/true);
    search(graph, query.size(), opts, pol);
    return pol.found;
}

std::optional<OracleCost> oracle_min_edits_restricted(const LabeledGraph& graph,
                                                      const QueryString& query,
                                                      const OracleOptions& opts) {
    RestrictedPolicy pol(graph, query, /*first_only=*/false);
    search(graph, query.size(), opts, pol);
    if (pol.best_cost == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return OracleCost{pol.best_cost, std::move(pol.best_walk)};
}

std::optional<OracleCost> oracle_min_edits_both(const LabeledGraph& graph, const QueryString& query,
                                                const OracleOptions& opts) {
    BothPolicy pol(graph, query);
    return run_min_search(graph, query, opts, pol);
}

std::optional<OracleCost> oracle_min_edits_query_only(const LabeledGraph& graph,
                                                      const QueryString& query,
                                                      const OracleOptions& opts) {
    QueryOnlyPolicy pol{graph, query, 0, std::numeric_limits<std::size_t>::max(), {}};
    return run_min_search(graph, query, opts, pol);
}

MatchWitness materialize_both_witness(const LabeledGraph& graph, const QueryString& query,
                                      const Walk& walk) {
    std::vector<MapCell> mapping = canonical_mapping(graph, walk);
    if (mapping.size() != query.size())
        throw WitnessError("walk spells " + std::to_string(mapping.size()) + " symbols, query has " +
                           std::to_string(query.size()));
    // Demands per cell, then per cell the cheapest final symbol: keep the
    // original when tied, otherwise the smallest demanded symbol.
    std::map<std::pair<VertexId, std::uint32_t>, std::vector<std::uint32_t>> positions_at;
    for (std::size_t i = 0; i < mapping.size(); ++i)
        positions_at[{mapping[i].vertex, mapping[i].offset}].push_back(static_cast<std::uint32_t>(i + 1));

    std::vector<LabelEdit> graph_edits;
    std::vector<QueryEdit> query_edits;
    for (const auto& [cell, positions] : positions_at) {
        const SymbolId original = graph.label(cell.first)[cell.second - 1];
        std::vector<SymbolId> ds;
        ds.reserve(positions.size());
        for (std::uint32_t p : positions) ds.push_back(query.at(p));
        auto total_for = [&](SymbolId x) {
            std::size_t c = (x == original) ? 0 : 1;
            for (SymbolId d : ds)
                if (d != x) ++c;
            return c;
        };
        SymbolId chosen = original;
        std::size_t chosen_cost = total_for(original);
        std::vector<SymbolId> candidates(ds);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (SymbolId x : candidates) {
            const std::size_t c = total_for(x);
            if (c < chosen_cost) {
                chosen = x;
                chosen_cost = c;
            }
        }
        if (chosen != original) graph_edits.push_back({cell.first, cell.second, chosen});
        for (std::uint32_t p : positions)
            if (query.at(p) != chosen) query_edits.push_back({p, chosen});
    }
    std::sort(query_edits.begin(), query_edits.end(),
              [](const QueryEdit& a, const QueryEdit& b) { return a.position < b.position; });
    return make_witness(graph, query.size(), walk, std::move(graph_edits), std::move(query_edits));
}

std::optional<std::vector<uint32_t>> oracle_hpath(const PlainGraph& graph, uint32_t h,
                                                  const OracleOptions& opts) {
    if (h == 0) throw ValidationError("path length must be positive");
    if (h > graph.vertex_count()) return std::nullopt;
    std::vector<char> visited(graph.vertex_count(), 0);
    std::vector<uint32_t> path;
    std::uint64_t nodes = 0;
    std::optional<std::vector<uint32_t>> result;

    // Lexicographic DFS; the first full path is the smallest one.
    auto go = [&](auto&& self, uint32_t v) -> bool {
        if (++nodes > opts.node_budget)
            throw BudgetError("path search passed " + std::to_string(opts.node_budget) + " nodes");
        visited[v] = 1;
        path.push_back(v);
        if (path.size() == h) {
            result = path;
        } else {
            for (uint32_t u : graph.out_neighbors(v)) {
                if (visited[u]) continue;
                if (self(self, u)) break;
            }
        }
        path.pop_back();
        visited[v] = 0;
        return result.has_value();
    };
    for (uint32_t v = 0; v < graph.vertex_count() && !result; ++v) go(go, v);
    return result;
}

std::optional<std::vector<uint32_t>> oracle_set_cover(
    uint32_t universe_size, const std::vector<std::vector<uint32_t>>& sets,
    const OracleOptions& opts) {
    for (const auto& set : sets)
        for (uint32_t e : set)
            if (e >= universe_size) throw ValidationError("set element out of universe");
    if (universe_size == 0) return std::vector<uint32_t>{};

    const auto m = static_cast<uint32_t>(sets.size());
    std::vector<uint32_t> hits(universe_size, 0);
    std::vector<uint32_t> chosen;
    std::uint64_t nodes = 0;
    std::optional<std::vector<uint32_t>> result;

    auto covered = [&] {
        for (uint32_t c : hits)
            if (c == 0) return false;
        return true;
    };
    // Fixed cover size, index combinations in lexicographic order; the first
    // covering combination at the smallest size wins.
    auto go = [&](auto&& self, uint32_t start, uint32_t remaining) -> bool {
        if (++nodes > opts.node_budget)
            throw BudgetError("cover search passed " + std::to_string(opts.node_budget) + " nodes");
        if (remaining == 0) {
            if (covered()) result = chosen;
            return result.has_value();
        }
        for (uint32_t i = start; i + remaining <= m; ++i) {
            chosen.push_back(i);
            for (uint32_t e : sets[i]) ++hits[e];
            const bool done = self(self, i + 1, remaining - 1);
            for (uint32_t e : sets[i]) --hits[e];
            chosen.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (uint32_t size = 1; size <= m && !result; ++size) go(go, 0, size);
    return result;
}

} // namespace sgmatch
