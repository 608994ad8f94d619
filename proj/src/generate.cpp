#include "sgmatch/generate.hpp"

#include <string>

#include "sgmatch/errors.hpp"
#include "sgmatch/rng.hpp"

namespace sgmatch {

namespace {

std::vector<std::string> make_tokens(uint32_t count) {
    std::vector<std::string> tokens;
    tokens.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        if (count <= 26)
            tokens.emplace_back(1, static_cast<char>('a' + i));
        else
            tokens.push_back("s" + std::to_string(i));
    }
    return tokens;
}

} // namespace

std::pair<LabeledGraph, QueryString> gen_instance(const GenSpec& spec) {
    if (spec.vertex_count == 0) throw ValidationError("generator needs at least one vertex");
    if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
        throw ValidationError("edge probability must lie in [0,1]");
    if (spec.alphabet_size == 0) throw ValidationError("generator needs a nonempty alphabet");
    if (spec.query_length == 0) throw ValidationError("generator needs a nonempty query");
    if (spec.shape != InstanceShape::UnitLabels && spec.max_label_len == 0)
        throw ValidationError("labels need at least one symbol");

    SplitMix64 rng(mix_seed(spec.seed, 0x67656eULL));
    const uint32_t n = spec.vertex_count;

    std::vector<Label> labels(n);
    for (uint32_t v = 0; v < n; ++v) {
        const uint32_t len = spec.shape == InstanceShape::UnitLabels
                                 ? 1
                                 : 1 + static_cast<uint32_t>(rng.below(spec.max_label_len));
        labels[v].reserve(len);
        for (uint32_t i = 0; i < len; ++i)
            labels[v].push_back(static_cast<SymbolId>(rng.below(spec.alphabet_size)));
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        const VertexId lo = spec.shape == InstanceShape::Dag ? u + 1 : 0;
        for (VertexId v = lo; v < n; ++v)
            if (rng.chance(spec.edge_probability)) edges.emplace_back(u, v);
    }
    LabeledGraph graph(Alphabet(make_tokens(spec.alphabet_size)), std::move(labels), std::move(edges));

    std::vector<SymbolId> qsyms;
    if (spec.plant_match) {
        // Random walk whose spelled length lands exactly on the target; the
        // query is its spelling, so an exact occurrence is guaranteed.
        for (int attempt = 0; attempt < 200 && qsyms.empty(); ++attempt) {
            Walk walk{static_cast<VertexId>(rng.below(n))};
            std::size_t spelled = graph.label_length(walk.back());
            while (spelled < spec.query_length) {
                auto outs = graph.out_neighbors(walk.back());
                if (outs.empty()) break;
                walk.push_back(outs[rng.below(outs.size())]);
                spelled += graph.label_length(walk.back());
            }
            if (spelled == spec.query_length) qsyms = spell(graph, walk);
        }
    }
    if (qsyms.empty()) {
        qsyms.reserve(spec.query_length);
        for (uint32_t i = 0; i < spec.query_length; ++i)
            qsyms.push_back(static_cast<SymbolId>(rng.below(spec.alphabet_size)));
    }
    return {std::move(graph), QueryString(std::move(qsyms))};
}

} // namespace sgmatch
