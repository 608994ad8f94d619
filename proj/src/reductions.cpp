#include "sgmatch/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "sgmatch/errors.hpp"

namespace sgmatch {

namespace {

std::uint32_t parse_u32(std::string_view tok, const char* what) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string(what) + " is not a number: '" + std::string(tok) + "'");
    return value;
}

std::string num_token(const char* prefix, std::size_t i) {
    return std::string(prefix) + std::to_string(i);
}

// Non-comment lines as integer rows; '#' starts a comment.
std::vector<std::vector<uint32_t>> number_rows(std::string_view text, const char* what) {
    std::vector<std::vector<uint32_t>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        std::istringstream toks{std::string(view)};
        std::vector<uint32_t> row;
        std::string tok;
        while (toks >> tok) row.push_back(parse_u32(tok, what));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

HPathInstance parse_hpath_instance(std::string_view text) {
    // First row: vertex count. Middle rows: "src dst". Last row: h.
    const auto rows = number_rows(text, "path instance entry");
    if (rows.size() < 2) throw ParseError("path instance needs a vertex count and a path length");
    if (rows.front().size() != 1) throw ParseError("first line must hold the vertex count alone");
    if (rows.back().size() != 1) throw ParseError("last line must hold the path length alone");
    const uint32_t n = rows.front()[0];
    const uint32_t h = rows.back()[0];
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        if (rows[i].size() != 2)
            throw ParseError("edge lines hold exactly 'src dst'");
        edges.emplace_back(rows[i][0], rows[i][1]);
    }
    try {
        HPathInstance inst{PlainGraph(n, std::move(edges)), h};
        if (inst.h == 0 || inst.h > inst.graph.vertex_count())
            throw ParseError("path length must lie in 1..|V|");
        return inst;
    } catch (const ValidationError& e) {
        std::string_view msg = e.what();
        if (constexpr std::string_view pre = "invalid: "; msg.starts_with(pre))
            msg.remove_prefix(pre.size());
        throw ParseError(std::string(msg));
    }
}

std::string serialize_hpath_instance(const HPathInstance& inst) {
    std::ostringstream out;
    out << inst.graph.vertex_count() << '\n';
    for (auto [src, dst] : inst.graph.edges()) out << src << ' ' << dst << '\n';
    out << inst.h << '\n';
    return std::move(out).str();
}

SetCoverInstance parse_setcover_instance(std::string_view text) {
    // First row: "n m". Then m rows of 1-based element indices, one per set.
    const auto rows = number_rows(text, "cover instance entry");
    if (rows.empty() || rows.front().size() != 2)
        throw ParseError("first line must hold 'n m'");
    SetCoverInstance inst;
    inst.universe_size = rows.front()[0];
    const uint32_t m = rows.front()[1];
    if (inst.universe_size == 0) throw ParseError("universe must be nonempty");
    if (m == 0) throw ParseError("instance needs at least one set");
    if (rows.size() != 1 + static_cast<std::size_t>(m))
        throw ParseError("expected " + std::to_string(m) + " set lines, found " +
                         std::to_string(rows.size() - 1));
    for (uint32_t i = 0; i < m; ++i) {
        std::vector<uint32_t> set;
        for (uint32_t e : rows[1 + i]) {
            if (e == 0 || e > inst.universe_size)
                throw ParseError("set " + std::to_string(i + 1) + ": element " + std::to_string(e) +
                                 " outside 1.." + std::to_string(inst.universe_size));
            set.push_back(e - 1);
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw ParseError("set " + std::to_string(i + 1) + " repeats an element");
        inst.sets.push_back(std::move(set));
    }
    return inst;
}

std::string serialize_setcover_instance(const SetCoverInstance& inst) {
    std::ostringstream out;
    out << inst.universe_size << ' ' << inst.sets.size() << '\n';
    for (const auto& set : inst.sets) {
        for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << (set[i] + 1);
        out << '\n';
    }
    return std::move(out).str();
}

ReductionArtifact reduce_hpath_unit(const HPathInstance& inst) {
    const uint32_t n = inst.graph.vertex_count();
    std::vector<std::string> tokens;
    tokens.reserve(n + inst.h);
    for (uint32_t i = 1; i <= n; ++i) tokens.push_back(num_token("x", i));
    for (uint32_t t = 1; t <= inst.h; ++t) tokens.push_back(num_token("y", t));

    std::vector<Label> labels(n);
    std::vector<VertexProvenance> provenance(n);
    for (uint32_t v = 0; v < n; ++v) {
        labels[v] = {v};
        provenance[v] = {VertexProvenance::Role::Source, v};
    }
    std::vector<std::pair<VertexId, VertexId>> edges(inst.graph.edges());

    std::vector<SymbolId> qsyms(inst.h);
    for (uint32_t t = 0; t < inst.h; ++t) qsyms[t] = n + t;

    return ReductionArtifact{
        ReductionKind::HPathUnit,
        LabeledGraph(Alphabet(std::move(tokens)), std::move(labels), std::move(edges)),
        QueryString(std::move(qsyms)),
        std::move(provenance),
        0,
        {},
        {},
        {},
        inst,
    };
}

ReductionArtifact reduce_hpath_binary(const HPathInstance& inst) {
    const uint32_t n = inst.graph.vertex_count();
    const uint32_t h = inst.h;
    std::vector<std::string> tokens{"0", "1"};

    std::vector<Label> labels(n, Label(h, 0));
    std::vector<VertexProvenance> provenance(n);
    for (uint32_t v = 0; v < n; ++v) provenance[v] = {VertexProvenance::Role::Source, v};
    std::vector<std::pair<VertexId, VertexId>> edges(inst.graph.edges());

    // Block t of the query is 0^(t-1) 1 0^(h-t); blocks force distinct walk
    // vertices because two blocks demand different symbols at one cell.
    std::vector<SymbolId> qsyms(static_cast<std::size_t>(h) * h, 0);
    for (uint32_t t = 0; t < h; ++t) qsyms[static_cast<std::size_t>(t) * h + t] = 1;

    return ReductionArtifact{
        ReductionKind::HPathBinary,
        LabeledGraph(Alphabet(std::move(tokens)), std::move(labels), std::move(edges)),
        QueryString(std::move(qsyms)),
        std::move(provenance),
        0,
        {},
        {},
        {},
        inst,
    };
}

ReductionArtifact reduce_setcover(const SetCoverInstance& inst) {
    const auto m = static_cast<uint32_t>(inst.sets.size());
    const uint32_t n = inst.universe_size;
    for (const auto& set : inst.sets) {
        if (set.empty()) throw ValidationError("sets must be nonempty");
        for (uint32_t e : set)
            if (e >= n) throw ValidationError("set element outside the universe");
    }

    // Symbols: x0, z, x1..xm, y1..yn.
    std::vector<std::string> tokens;
    tokens.reserve(2 + m + n);
    tokens.push_back("x0");
    tokens.push_back("z");
    for (uint32_t i = 1; i <= m; ++i) tokens.push_back(num_token("x", i));
    for (uint32_t j = 1; j <= n; ++j) tokens.push_back(num_token("y", j));
    const SymbolId sym_x0 = 0;
    const SymbolId sym_z = 1;
    auto sym_x = [&](uint32_t i) { return 2 + i; };         // set index, 0-based
    auto sym_y = [&](uint32_t j) { return 2 + m + j; };     // element index, 0-based

    std::vector<Label> labels;
    std::vector<VertexProvenance> provenance;
    std::vector<std::pair<VertexId, VertexId>> edges;
    labels.push_back({sym_x0});
    provenance.push_back({VertexProvenance::Role::Start, 0});

    std::vector<VertexId> set_vertices(m);
    for (uint32_t i = 0; i < m; ++i) {
        set_vertices[i] = static_cast<VertexId>(labels.size());
        labels.push_back({sym_x(i)});
        provenance.push_back({VertexProvenance::Role::SetGadget, i});
        edges.emplace_back(0, set_vertices[i]);
    }
    std::vector<std::vector<VertexId>> element_vertices(m);
    for (uint32_t i = 0; i < m; ++i) {
        for (uint32_t e : inst.sets[i]) {
            const auto id = static_cast<VertexId>(labels.size());
            labels.push_back({sym_y(e)});
            provenance.push_back({VertexProvenance::Role::ElementGadget, e});
            edges.emplace_back(set_vertices[i], id);
            edges.emplace_back(id, 0);
            element_vertices[i].push_back(id);
        }
    }

    std::vector<SymbolId> qsyms;
    qsyms.reserve(3 * static_cast<std::size_t>(n));
    for (uint32_t j = 0; j < n; ++j) {
        qsyms.push_back(sym_x0);
        qsyms.push_back(sym_z);
        qsyms.push_back(sym_y(j));
    }

    return ReductionArtifact{
        ReductionKind::SetCover,
        LabeledGraph(Alphabet(std::move(tokens)), std::move(labels), std::move(edges)),
        QueryString(std::move(qsyms)),
        std::move(provenance),
        0,
        std::move(set_vertices),
        std::move(element_vertices),
        inst,
        std::nullopt,
    };
}

std::vector<uint32_t> extract_hpath(const ReductionArtifact& art, const Walk& walk) {
    if (art.kind == ReductionKind::SetCover)
        throw ValidationError("artifact does not encode a path problem");
    const HPathInstance& src = art.source_path.value();
    try {
        validate_walk(art.graph, walk);
    } catch (const ValidationError& e) {
        throw WitnessError(e.what());
    }
    if (walk.size() != src.h)
        throw WitnessError("walk visits " + std::to_string(walk.size()) + " vertices, need " +
                           std::to_string(src.h));
    std::set<VertexId> seen(walk.begin(), walk.end());
    if (seen.size() != walk.size()) throw WitnessError("walk repeats a vertex, not a simple path");

    std::vector<uint32_t> path;
    path.reserve(walk.size());
    for (VertexId v : walk) {
        const VertexProvenance& p = art.provenance[v];
        if (p.role != VertexProvenance::Role::Source) throw WitnessError("walk leaves the source copy");
        path.push_back(p.index);
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!src.graph.has_edge(path[i], path[i + 1]))
            throw WitnessError("decoded step is not a source edge");
    return path;
}

std::vector<uint32_t> extract_cover(const ReductionArtifact& art, const MatchWitness& witness) {
    if (art.kind != ReductionKind::SetCover)
        throw ValidationError("artifact does not encode a cover problem");
    const SetCoverInstance& src = art.source_cover;
    const uint32_t n = src.universe_size;
    const std::size_t cost = verify_witness(art.graph, art.query, witness);
    if (!witness.query_edits.empty())
        throw WitnessError("restricted witness must not edit the query");
    if (cost >= n)
        throw WitnessError("cover decoding needs cost below " + std::to_string(n));
    // Under n edits the walk is forced into start/set/element rounds: any
    // other start either revisits the start vertex with clashing demands or
    // pays for every block.
    if (witness.walk.size() != 3 * static_cast<std::size_t>(n) || witness.walk[0] != art.start_vertex)
        throw WitnessError("walk is not in normal form");

    std::set<uint32_t> edited_sets;
    for (const LabelEdit& e : witness.graph_edits)
        if (art.provenance[e.vertex].role == VertexProvenance::Role::SetGadget)
            edited_sets.insert(art.provenance[e.vertex].index);

    std::vector<char> element_edited(art.graph.vertex_count(), 0);
    for (const LabelEdit& e : witness.graph_edits)
        if (art.provenance[e.vertex].role == VertexProvenance::Role::ElementGadget)
            element_edited[e.vertex] = 1;

    std::set<uint32_t> cover;
    for (uint32_t block = 0; block < n; ++block) {
        const VertexId sv = witness.walk[3 * block + 1];
        const VertexId ev = witness.walk[3 * block + 2];
        if (art.provenance[sv].role != VertexProvenance::Role::SetGadget ||
            art.provenance[ev].role != VertexProvenance::Role::ElementGadget)
            throw WitnessError("walk is not in normal form");
        const uint32_t set_index = art.provenance[sv].index;
        if (!element_edited[ev]) {
            // Unedited element copy: its set really contains this element.
            if (art.provenance[ev].index != block) throw WitnessError("element copy spells the wrong symbol");
            cover.insert(set_index);
            continue;
        }
        // Edited copy: reroute the block through a set that contains the
        // element, preferring one already chosen or already paid for.
        std::optional<uint32_t> replacement;
        for (uint32_t i = 0; i < src.sets.size(); ++i) {
            if (!std::binary_search(src.sets[i].begin(), src.sets[i].end(), block)) continue;
            if (!replacement) replacement = i;
            if (cover.count(i) || edited_sets.count(i)) {
                replacement = i;
                break;
            }
        }
        if (!replacement) throw WitnessError("element " + std::to_string(block + 1) + " is in no set");
        cover.insert(*replacement);
    }

    if (cover.size() > cost) throw WitnessError("decoded cover exceeds the witness cost");
    std::vector<char> hit(n, 0);
    for (uint32_t i : cover)
        for (uint32_t e : src.sets[i]) hit[e] = 1;
    for (uint32_t e = 0; e < n; ++e)
        if (!hit[e]) throw WitnessError("decoded cover misses element " + std::to_string(e + 1));
    return std::vector<uint32_t>(cover.begin(), cover.end());
}

} // namespace sgmatch
