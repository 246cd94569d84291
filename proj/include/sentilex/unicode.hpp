#ifndef SENTILEX_UNICODE_HPP_
#define SENTILEX_UNICODE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sentilex::uni {

// Decodes UTF-8 into codepoints. Throws utf8_error (with byte offset)
// on invalid sequences; `context` names the input for the message.
std::vector<char32_t> decode_utf8(std::string_view text,
                                  const std::string& context = "input");

std::string encode_utf8(const std::vector<char32_t>& cps);
std::string encode_utf8(char32_t cp);

// Canonical text normalization used everywhere terms and tokens are
// compared: NFC, full Unicode case folding, NFC again. Idempotent.
// Dotted Igbo vowels survive the fold (U+1ECC -> U+1ECD and friends),
// and decomposed base+combining-mark input composes to the same result.
std::string normalize(std::string_view text);

bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);

}  // namespace sentilex::uni

#endif  // SENTILEX_UNICODE_HPP_
