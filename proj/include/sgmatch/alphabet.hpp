#ifndef SGMATCH_ALPHABET_HPP
#define SGMATCH_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sgmatch {

using SymbolId = std::uint32_t;

// Ordered set of distinct symbol tokens. Tokens are nonempty strings without
// whitespace; a symbol is identified by its position in declaration order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

    const std::string& token(SymbolId id) const;
    std::optional<SymbolId> find(std::string_view token) const;
    // Lookup that throws ParseError for unknown tokens.
    SymbolId id(std::string_view token) const;
    bool contains(std::string_view token) const { return find(token).has_value(); }

    const std::vector<std::string>& tokens() const { return tokens_; }

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
};

} // namespace sgmatch

#endif
