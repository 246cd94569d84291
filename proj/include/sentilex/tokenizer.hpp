#ifndef SENTILEX_TOKENIZER_HPP_
#define SENTILEX_TOKENIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sentilex/lexicon.hpp"

namespace sentilex {

struct Token {
    std::string text;   // normalized
    std::size_t start;  // codepoint offset into the original text
    std::size_t end;    // one past the last codepoint

    bool operator==(const Token&) const = default;
};

struct TokenStream {
    std::string document_id;
    std::vector<Token> tokens;

    std::size_t size() const { return tokens.size(); }
};

// Splits on Unicode whitespace, strips punctuation/symbols from token
// edges (interior hyphens and apostrophes survive), normalizes each
// token. Offsets cover the stripped extent in the original text.
TokenStream tokenize(std::string_view text, const std::string& document_id);

// All unigrams; adjacent bigrams when max_arity = 2; skip-bigrams with
// 1..skip_window intervening tokens, flagged skip = true. Ordered by
// first-token position. max_arity must be 1 or 2.
std::vector<Term> extract_ngrams(const TokenStream& stream,
                                 std::size_t max_arity,
                                 std::size_t skip_window);

}  // namespace sentilex

#endif  // SENTILEX_TOKENIZER_HPP_
