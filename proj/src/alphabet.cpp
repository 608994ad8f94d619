#include "sgmatch/alphabet.hpp"

#include <cctype>

#include "sgmatch/errors.hpp"

namespace sgmatch {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw ValidationError("alphabet must be nonempty");
    index_.reserve(tokens_.size());
    for (SymbolId id = 0; id < tokens_.size(); ++id) {
        const std::string& tok = tokens_[id];
        if (tok.empty()) throw ValidationError("alphabet token must be nonempty");
        for (unsigned char ch : tok) {
            if (std::isspace(ch)) throw ValidationError("alphabet token contains whitespace: '" + tok + "'");
        }
        if (tok.find(',') != std::string::npos)
            throw ValidationError("alphabet token contains ',': '" + tok + "'");
        if (!index_.emplace(tok, id).second)
            throw ValidationError("duplicate alphabet token: '" + tok + "'");
    }
}

const std::string& Alphabet::token(SymbolId id) const {
    if (id >= tokens_.size()) throw ValidationError("symbol id out of range");
    return tokens_[id];
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::id(std::string_view token) const {
    auto found = find(token);
    if (!found) throw ParseError("unknown symbol token: '" + std::string(token) + "'");
    return *found;
}

} // namespace sgmatch
