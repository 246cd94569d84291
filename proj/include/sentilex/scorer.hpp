#ifndef SENTILEX_SCORER_HPP_
#define SENTILEX_SCORER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "sentilex/lexicon.hpp"
#include "sentilex/tokenizer.hpp"

namespace sentilex {

inline constexpr std::size_t kDefaultSkipWindow = 2;

struct Match {
    Term term;
    std::size_t token_pos;  // index of the first matched token
    std::size_t cp_start;   // codepoint offset of the first matched token
    double contribution;    // +1/-1 for categorical, valence otherwise
};

struct ScoreResult {
    std::string document_id;
    std::string lexicon_name;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
    double valence_sum = 0.0;
    std::vector<Match> matches;
    Polarity polarity = Polarity::Neutral;
};

// Greedy longest-match-first, left to right. At each unconsumed token
// the longest adjacent lexicon term starting there wins; skip-bigrams
// (both members unconsumed, gap in [1, skip_window]) are tried next,
// then unigrams. Matched tokens are consumed; matches never overlap.
std::vector<Match> match_terms(const TokenStream& stream,
                               const Lexicon& lexicon,
                               std::size_t skip_window = kDefaultSkipWindow);

// Tokenize + match + classify. Categorical: decision value is
// positive_count - negative_count; valenced/ngram-scored: the sum of
// matched valences. Polarity is the sign of the decision value.
ScoreResult score_document(std::string_view document,
                           const std::string& document_id,
                           const Lexicon& lexicon,
                           std::size_t skip_window = kDefaultSkipWindow);

ScoreResult score_stream(const TokenStream& stream, const Lexicon& lexicon,
                         std::size_t skip_window = kDefaultSkipWindow);

using Document = std::pair<std::string, std::string>;  // (id, text)

// Element-wise score_document, order-preserving. Duplicate document ids
// are a hard error. The default entry point scores documents in
// parallel; the _serial variant is the reference implementation and
// must produce identical results.
std::vector<ScoreResult> score_corpus(
    const std::vector<Document>& documents, const Lexicon& lexicon,
    std::size_t skip_window = kDefaultSkipWindow);
std::vector<ScoreResult> score_corpus_serial(
    const std::vector<Document>& documents, const Lexicon& lexicon,
    std::size_t skip_window = kDefaultSkipWindow);

}  // namespace sentilex

#endif  // SENTILEX_SCORER_HPP_
