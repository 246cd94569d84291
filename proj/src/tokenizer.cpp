#include "sentilex/tokenizer.hpp"

#include "sentilex/error.hpp"
#include "sentilex/unicode.hpp"

namespace sentilex {

TokenStream tokenize(std::string_view text, const std::string& document_id) {
    TokenStream stream;
    stream.document_id = document_id;

    const std::vector<char32_t> cps =
        uni::decode_utf8(text, "document '" + document_id + "'");
    std::size_t i = 0;
    const std::size_t n = cps.size();
    while (i < n) {
        while (i < n && uni::is_whitespace(cps[i])) ++i;
        if (i >= n) break;
        std::size_t start = i;
        while (i < n && !uni::is_whitespace(cps[i])) ++i;
        std::size_t end = i;
        // Trim punctuation and symbols at the edges only.
        while (start < end && uni::is_punctuation(cps[start])) ++start;
        while (end > start && uni::is_punctuation(cps[end - 1])) --end;
        if (start == end) continue;

        std::string raw;
        for (std::size_t k = start; k < end; ++k)
            raw += uni::encode_utf8(cps[k]);
        stream.tokens.push_back({uni::normalize(raw), start, end});
    }
    return stream;
}

std::vector<Term> extract_ngrams(const TokenStream& stream,
                                 std::size_t max_arity,
                                 std::size_t skip_window) {
    if (max_arity != 1 && max_arity != 2)
        throw error("extract_ngrams: max_arity must be 1 or 2, got " +
                    std::to_string(max_arity));
    std::vector<Term> out;
    const auto& toks = stream.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        Term uni;
        uni.tokens = {toks[i].text};
        out.push_back(std::move(uni));
        if (max_arity < 2) continue;
        if (i + 1 < toks.size()) {
            Term bi;
            bi.tokens = {toks[i].text, toks[i + 1].text};
            out.push_back(std::move(bi));
        }
        for (std::size_t gap = 1; gap <= skip_window; ++gap) {
            std::size_t j = i + 1 + gap;
            if (j >= toks.size()) break;
            Term sk;
            sk.tokens = {toks[i].text, toks[j].text};
            sk.skip = true;
            out.push_back(std::move(sk));
        }
    }
    return out;
}

}  // namespace sentilex
