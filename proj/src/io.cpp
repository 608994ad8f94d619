#include "sgmatch/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "sgmatch/errors.hpp"

namespace sgmatch {

namespace {

// Strips a '#' comment and splits on whitespace.
std::vector<std::string_view> tokenize_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint32_t parse_u32(std::string_view tok, const char* what) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string(what) + " is not a number: '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

LabeledGraph parse_graph(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<std::pair<std::uint32_t, Label>> vertex_rows;
    std::vector<std::pair<VertexId, VertexId>> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto toks = tokenize_line(line);
        if (toks.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (toks[0] == "sigma") {
            if (alphabet) throw ParseError(where + ": duplicate sigma line");
            if (toks.size() < 2) throw ParseError(where + ": sigma needs at least one token");
            std::vector<std::string> symbols(toks.begin() + 1, toks.end());
            try {
                alphabet.emplace(std::move(symbols));
            } catch (const ValidationError& e) {
                throw ParseError(where + ": " + e.what());
            }
        } else if (toks[0] == "v") {
            if (!alphabet) throw ParseError(where + ": v before sigma");
            if (toks.size() != 3) throw ParseError(where + ": v needs '<id> <label>'");
            std::uint32_t id = parse_u32(toks[1], "vertex id");
            Label label;
            for (std::string_view part : split_commas(toks[2])) {
                if (part.empty()) throw ParseError(where + ": empty label component");
                label.push_back(alphabet->id(part));
            }
            vertex_rows.emplace_back(id, std::move(label));
        } else if (toks[0] == "e") {
            if (!alphabet) throw ParseError(where + ": e before sigma");
            if (toks.size() != 3) throw ParseError(where + ": e needs '<src> <dst>'");
            edges.emplace_back(parse_u32(toks[1], "edge source"), parse_u32(toks[2], "edge target"));
        } else {
            throw ParseError(where + ": unknown directive '" + std::string(toks[0]) + "'");
        }
        if (pos > text.size()) break;
    }

    if (!alphabet) throw ParseError("missing sigma line");
    if (vertex_rows.empty()) throw ParseError("graph has no vertices");
    std::vector<Label> labels(vertex_rows.size());
    std::vector<bool> seen(vertex_rows.size(), false);
    for (auto& [id, label] : vertex_rows) {
        if (id >= labels.size())
            throw ParseError("vertex ids must cover 0..n-1; id " + std::to_string(id) +
                             " with " + std::to_string(labels.size()) + " v lines");
        if (seen[id]) throw ParseError("duplicate vertex id " + std::to_string(id));
        seen[id] = true;
        labels[id] = std::move(label);
    }
    try {
        return LabeledGraph(std::move(*alphabet), std::move(labels), std::move(edges));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_graph(const LabeledGraph& graph) {
    std::ostringstream out;
    out << "sigma";
    for (const std::string& tok : graph.alphabet().tokens()) out << ' ' << tok;
    out << '\n';
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        out << "v " << v << ' ';
        auto label = graph.label(v);
        for (std::size_t i = 0; i < label.size(); ++i) {
            if (i) out << ',';
            out << graph.alphabet().token(label[i]);
        }
        out << '\n';
    }
    for (auto [src, dst] : graph.edges()) out << "e " << src << ' ' << dst << '\n';
    return std::move(out).str();
}

QueryString parse_query(std::string_view text, const Alphabet& alphabet) {
    std::vector<SymbolId> symbols;
    bool content_seen = false;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto toks = tokenize_line(line);
        if (!toks.empty()) {
            if (content_seen)
                throw ParseError("line " + std::to_string(line_no) + ": query must be a single line");
            content_seen = true;
            for (std::string_view tok : toks) symbols.push_back(alphabet.id(tok));
        }
        if (pos > text.size()) break;
    }
    if (!content_seen) throw ParseError("query document has no content line");
    return QueryString(std::move(symbols));
}

std::string serialize_query(const QueryString& query, const Alphabet& alphabet) {
    std::ostringstream out;
    auto symbols = query.symbols();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out << ' ';
        out << alphabet.token(symbols[i]);
    }
    out << '\n';
    return std::move(out).str();
}

std::string witness_to_json(const MatchWitness& witness, const LabeledGraph& graph) {
    nlohmann::ordered_json doc;
    doc["format"] = "sgmatch-witness";
    doc["version"] = 1;
    doc["walk"] = witness.walk;
    auto mapping = nlohmann::ordered_json::array();
    for (const MapCell& cell : witness.mapping)
        mapping.push_back({{"vertex", cell.vertex}, {"offset", cell.offset}});
    doc["mapping"] = std::move(mapping);
    auto graph_edits = nlohmann::ordered_json::array();
    for (const LabelEdit& e : witness.graph_edits)
        graph_edits.push_back(
            {{"vertex", e.vertex}, {"offset", e.offset}, {"symbol", graph.alphabet().token(e.symbol)}});
    doc["graph_edits"] = std::move(graph_edits);
    auto query_edits = nlohmann::ordered_json::array();
    for (const QueryEdit& e : witness.query_edits)
        query_edits.push_back({{"position", e.position}, {"symbol", graph.alphabet().token(e.symbol)}});
    doc["query_edits"] = std::move(query_edits);
    doc["cost"] = witness.cost();
    return doc.dump(2) + "\n";
}

MatchWitness witness_from_json(std::string_view text, const LabeledGraph& graph) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness json: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "sgmatch-witness")
            throw ParseError("witness json: wrong format tag");
        if (doc.at("version").get<int>() != 1) throw ParseError("witness json: unsupported version");
        MatchWitness w;
        w.walk = doc.at("walk").get<Walk>();
        for (const auto& cell : doc.at("mapping"))
            w.mapping.push_back({cell.at("vertex").get<VertexId>(), cell.at("offset").get<std::uint32_t>()});
        for (const auto& e : doc.at("graph_edits"))
            w.graph_edits.push_back({e.at("vertex").get<VertexId>(), e.at("offset").get<std::uint32_t>(),
                                     graph.alphabet().id(e.at("symbol").get<std::string>())});
        for (const auto& e : doc.at("query_edits"))
            w.query_edits.push_back({e.at("position").get<std::uint32_t>(),
                                     graph.alphabet().id(e.at("symbol").get<std::string>())});
        if (doc.at("cost").get<std::size_t>() != w.cost())
            throw ParseError("witness json: cost field disagrees with edit lists");
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness json: ") + e.what());
    }
}

} // namespace sgmatch
