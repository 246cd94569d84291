#include "sentilex/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "sentilex/error.hpp"

namespace sentilex::uni {

std::vector<char32_t> decode_utf8(std::string_view text,
                                  const std::string& context) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    while (i < n) {
        const std::size_t start = i;
        unsigned char b0 = s[i];
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw utf8_error(start, context);
        }
        if (start + len > n) throw utf8_error(start, context);
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = s[start + k];
            if ((b & 0xC0) != 0x80) throw utf8_error(start, context);
            cp = (cp << 6) | (b & 0x3F);
        }
        i = start + len;
        // Reject overlong encodings, surrogates and out-of-range values.
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMin[len]) throw utf8_error(start, context);
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw utf8_error(start, context);
        out.push_back(cp);
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) out += encode_utf8(cp);
    return out;
}

std::string normalize(std::string_view text) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw error("ICU NFC instance unavailable");

    icu::UnicodeString u = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    icu::UnicodeString composed = nfc->normalize(u, status);
    composed.foldCase(U_FOLD_CASE_DEFAULT);
    icu::UnicodeString folded = nfc->normalize(composed, status);
    if (U_FAILURE(status)) throw error("Unicode normalization failed");

    std::string out;
    folded.toUTF8String(out);
    return out;
}

bool is_whitespace(char32_t cp) {
    return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

bool is_punctuation(char32_t cp) {
    const auto c = static_cast<UChar32>(cp);
    // Token-edge trimming also removes symbol characters ($, +, <, etc.)
    // so that quoted or bracketed words match their lexicon entries.
    return u_ispunct(c) != 0 || u_charType(c) == U_MATH_SYMBOL ||
           u_charType(c) == U_CURRENCY_SYMBOL ||
           u_charType(c) == U_MODIFIER_SYMBOL ||
           u_charType(c) == U_OTHER_SYMBOL;
}

}  // namespace sentilex::uni
