#include "sgmatch/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "sgmatch/errors.hpp"
#include "sgmatch/rng.hpp"
#include "sgmatch/witness.hpp"

namespace sgmatch {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kU64Max / b) return kU64Max;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exp; ++i) out = sat_mul(out, base);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // c = c * (n - k + i) / i stays integral at every step.
        const std::uint64_t factor = n - k + i;
        if (c > kU64Max / factor) return kU64Max;
        c = c * factor / i;
    }
    return c;
}

void require_unit_labels(const LabeledGraph& graph) {
    if (!graph.unit_labels()) throw ValidationError("color-coding requires unit labels");
}

} // namespace

std::size_t randomized_family_size(uint32_t k, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
    return static_cast<std::size_t>(std::ceil(std::exp(static_cast<double>(k)) * std::log(1.0 / delta)));
}

std::size_t deterministic_family_size(uint32_t vertex_count, uint32_t k) {
    if (k == 0) throw ValidationError("color count must be positive");
    if (k == 1) return vertex_count == 0 ? 0 : 1;
    return binomial(vertex_count, k);
}

ColoringFamily ColoringFamily::deterministic(uint32_t vertex_count, uint32_t k) {
    ColoringFamily fam;
    fam.vertex_count_ = vertex_count;
    fam.k_ = k;
    fam.randomized_ = false;
    fam.size_ = deterministic_family_size(vertex_count, k);
    return fam;
}

ColoringFamily ColoringFamily::randomized(uint32_t vertex_count, uint32_t k, double delta,
                                          uint64_t seed) {
    ColoringFamily fam;
    fam.vertex_count_ = vertex_count;
    fam.k_ = k;
    fam.randomized_ = true;
    fam.seed_ = seed;
    fam.size_ = randomized_family_size(k, delta);
    return fam;
}

Coloring ColoringFamily::at(std::size_t index) const {
    if (index >= size_) throw ValidationError("coloring index out of range");
    Coloring col;
    col.k = k_;
    col.assignment.assign(vertex_count_, 0);
    if (randomized_) {
        SplitMix64 rng(mix_seed(seed_, k_, index));
        for (uint32_t v = 0; v < vertex_count_; ++v)
            col.assignment[v] = static_cast<uint32_t>(rng.below(k_));
        return col;
    }
    if (k_ == 1) return col;
    // Lexicographic unranking of the index-th k-subset; members take colors
    // 0..k-1 by rank, everything else color 0.
    std::uint64_t remaining = index;
    uint32_t next = 0;
    for (uint32_t slot = 0; slot < k_; ++slot) {
        for (uint32_t v = next;; ++v) {
            const std::uint64_t block = binomial(vertex_count_ - 1 - v, k_ - 1 - slot);
            if (remaining < block) {
                col.assignment[v] = slot;
                next = v + 1;
                break;
            }
            remaining -= block;
        }
    }
    return col;
}

namespace {

// Shared per-trial scratch: forward row propagation with parent pointers.
// Rows hold vertices v with M[i][v] = 1, ascending.
struct DpScratch {
    std::vector<SymbolId> vertex_symbol;      // r(c(v)) as a SymbolId
    std::vector<std::vector<VertexId>> rows;  // rows[i-1]
    std::vector<std::vector<VertexId>> parent; // parent[i-1][v]
    std::vector<std::uint32_t> stamp;
    std::uint32_t tag = 0;
};

std::optional<Walk> dp_run(const LabeledGraph& graph, const QueryString& query,
                           const Coloring& coloring, const RFunction& r,
                           const std::vector<SymbolId>& distinct, DpScratch& scratch) {
    const std::size_t n = graph.vertex_count();
    const std::size_t L = query.size();
    scratch.vertex_symbol.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        scratch.vertex_symbol[v] = distinct[r[coloring.assignment[v]]];
    if (scratch.rows.size() < L) {
        scratch.rows.resize(L);
        scratch.parent.resize(L);
    }
    if (scratch.stamp.size() < n) scratch.stamp.resize(n, 0);
    for (std::size_t i = 0; i < L; ++i) {
        scratch.rows[i].clear();
        scratch.parent[i].resize(n);
    }

    auto& first = scratch.rows[0];
    for (VertexId v = 0; v < n; ++v)
        if (scratch.vertex_symbol[v] == query.at(1)) first.push_back(v);
    if (first.empty()) return std::nullopt;

    for (std::size_t i = 2; i <= L; ++i) {
        const SymbolId want = query.at(i);
        auto& prev = scratch.rows[i - 2];
        auto& cur = scratch.rows[i - 1];
        ++scratch.tag;
        for (VertexId u : prev) {
            for (VertexId w : graph.out_neighbors(u)) {
                if (scratch.stamp[w] == scratch.tag) continue;
                if (scratch.vertex_symbol[w] != want) continue;
                scratch.stamp[w] = scratch.tag;
                scratch.parent[i - 1][w] = u;
                cur.push_back(w);
            }
        }
        if (cur.empty()) return std::nullopt;
        std::sort(cur.begin(), cur.end());
    }

    Walk walk(L);
    walk[L - 1] = scratch.rows[L - 1].front();
    for (std::size_t i = L; i >= 2; --i) walk[i - 2] = scratch.parent[i - 1][walk[i - 1]];
    return walk;
}

} // namespace

std::optional<Walk> dp_compatible_under(const LabeledGraph& graph, const QueryString& query,
                                        const Coloring& coloring, const RFunction& r) {
    require_unit_labels(graph);
    if (coloring.assignment.size() != graph.vertex_count())
        throw ValidationError("coloring does not cover the vertex set");
    const auto distinct = query.distinct_symbols();
    if (r.size() != coloring.k) throw ValidationError("r-function arity differs from color count");
    for (uint32_t digit : r)
        if (digit >= distinct.size()) throw ValidationError("r-function maps outside query symbols");
    DpScratch scratch;
    return dp_run(graph, query, coloring, r, distinct, scratch);
}

std::vector<std::vector<char>> dp_table(const LabeledGraph& graph, const QueryString& query,
                                        const Coloring& coloring, const RFunction& r) {
    require_unit_labels(graph);
    const auto distinct = query.distinct_symbols();
    const std::size_t n = graph.vertex_count();
    const std::size_t L = query.size();
    std::vector<std::vector<char>> table(L, std::vector<char>(n, 0));
    for (VertexId v = 0; v < n; ++v)
        table[0][v] = distinct[r[coloring.assignment[v]]] == query.at(1);
    for (std::size_t i = 2; i <= L; ++i) {
        for (VertexId v = 0; v < n; ++v) {
            if (distinct[r[coloring.assignment[v]]] != query.at(i)) continue;
            for (VertexId u : graph.in_neighbors(v)) {
                if (table[i - 2][u]) {
                    table[i - 1][v] = 1;
                    break;
                }
            }
        }
    }
    return table;
}

namespace {

struct TrialPlan {
    ColoringFamily family;
    std::uint64_t r_count = 1;    // d^k
    std::uint64_t trials = 0;     // family.size * r_count, saturating
    uint32_t k = 0;

    explicit TrialPlan(ColoringFamily fam) : family(std::move(fam)) {}
};

RFunction unrank_r(std::uint64_t index, uint32_t k, std::uint64_t d) {
    // Lexicographic over (r(1), ..., r(k)): first color varies slowest.
    RFunction r(k);
    for (uint32_t slot = k; slot-- > 0;) {
        r[slot] = static_cast<uint32_t>(index % d);
        index /= d;
    }
    return r;
}

struct TrialOutcome {
    std::uint64_t index = kU64Max;
    Walk walk;
};

// Runs trials of one k in canonical order across a worker pool; the smallest
// successful index wins regardless of schedule because no smaller index is
// ever skipped.
std::optional<TrialOutcome> run_trials(const LabeledGraph& graph, const QueryString& query,
                                       const std::vector<SymbolId>& distinct, const TrialPlan& plan,
                                       std::uint64_t limit, unsigned workers) {
    const std::uint64_t d = distinct.size();
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{kU64Max};
    std::mutex result_mutex;
    std::vector<TrialOutcome> successes;
    std::vector<std::exception_ptr> errors;
    constexpr std::uint64_t kBlock = 64;

    auto worker = [&] {
        DpScratch scratch;
        try {
            while (true) {
                const std::uint64_t start = next_block.fetch_add(kBlock);
                if (start >= limit || start > best.load()) return;
                const std::uint64_t stop = std::min(limit, start + kBlock);
                for (std::uint64_t t = start; t < stop; ++t) {
                    if (t > best.load()) break;
                    const Coloring coloring = plan.family.at(t / plan.r_count);
                    const RFunction r = unrank_r(t % plan.r_count, plan.k, d);
                    auto walk = dp_run(graph, query, coloring, r, distinct, scratch);
                    if (!walk) continue;
                    std::uint64_t seen = best.load();
                    while (t < seen && !best.compare_exchange_weak(seen, t)) {
                    }
                    std::lock_guard<std::mutex> lock(result_mutex);
                    successes.push_back({t, std::move(*walk)});
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(result_mutex);
            errors.push_back(std::current_exception());
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!errors.empty()) std::rethrow_exception(errors.front());
    const std::uint64_t won = best.load();
    if (won == kU64Max) return std::nullopt;
    for (auto& s : successes)
        if (s.index == won) return std::move(s);
    return std::nullopt;
}

} // namespace

FptResult fpt_compatible(const LabeledGraph& graph, const QueryString& query,
                         const FptConfig& config) {
    require_unit_labels(graph);
    const std::size_t L = query.size();
    FptResult res;
    if (L == 1) {
        // Any single vertex is compatible: rewrite its label to s[1].
        res.answer = FptAnswer::Yes;
        res.witness_k = 1;
        res.witness_walk = Walk{0};
        return res;
    }
    const auto distinct = query.distinct_symbols();
    const auto kmax = static_cast<uint32_t>(std::min<std::size_t>(L, graph.vertex_count()));
    const std::uint64_t budget = config.trial_budget == 0 ? kU64Max : config.trial_budget;
    std::uint64_t used = 0;

    for (uint32_t k = 1; k <= kmax; ++k) {
        const auto nverts = static_cast<uint32_t>(graph.vertex_count());
        TrialPlan plan(config.mode == FptMode::Deterministic
                           ? ColoringFamily::deterministic(nverts, k)
                           : ColoringFamily::randomized(nverts, k, config.delta, config.seed));
        plan.k = k;
        plan.r_count = sat_pow(distinct.size(), k);
        plan.trials = sat_mul(plan.family.size(), plan.r_count);
        const std::uint64_t limit = std::min(plan.trials, budget - used);
        auto outcome = run_trials(graph, query, distinct, plan, limit, config.workers);
        if (outcome) {
            // Soundness gate: the walk must certify compatibility on its own.
            MatchWitness w = materialize_restricted_witness(graph, query, outcome->walk);
            verify_witness(graph, query, w);
            Walk sorted = outcome->walk;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            res.answer = FptAnswer::Yes;
            res.trials_run = used + outcome->index + 1;
            res.witness_k = static_cast<uint32_t>(sorted.size());
            res.witness_walk = std::move(outcome->walk);
            return res;
        }
        if (limit < plan.trials)
            throw BudgetError("trial budget " + std::to_string(budget) + " exhausted at k=" +
                              std::to_string(k));
        used += plan.trials;
    }
    res.answer = config.mode == FptMode::Deterministic ? FptAnswer::No : FptAnswer::ProbablyNo;
    res.trials_run = used;
    return res;
}

} // namespace sgmatch
