#include "sentilex/scorer.hpp"

#include <exception>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sentilex/error.hpp"

namespace sentilex {

namespace {

double entry_contribution(const LexiconEntry& entry) {
    if (entry.polarity)
        return *entry.polarity == Polarity::Positive ? 1.0 : -1.0;
    return *entry.valence;
}

}  // namespace

std::vector<Match> match_terms(const TokenStream& stream,
                               const Lexicon& lexicon,
                               std::size_t skip_window) {
    std::vector<Match> matches;
    const auto& toks = stream.tokens;
    const std::size_t n = toks.size();
    std::vector<char> consumed(n, 0);
    const std::size_t max_len = std::min<std::size_t>(lexicon.max_arity(), 5);

    for (std::size_t i = 0; i < n; ++i) {
        if (consumed[i]) continue;

        const LexiconEntry* hit = nullptr;
        std::size_t hit_len = 0;    // adjacent span length
        std::size_t hit_partner = 0;  // skip partner index

        // Longest adjacent term starting at i.
        for (std::size_t len = max_len; len >= 1 && !hit; --len) {
            if (i + len > n) continue;
            bool free = true;
            for (std::size_t k = i; k < i + len; ++k)
                if (consumed[k]) { free = false; break; }
            if (!free) continue;
            // Unigrams rank below skip-bigrams; handled after the skip scan.
            if (len == 1) break;
            Term probe;
            for (std::size_t k = i; k < i + len; ++k)
                probe.tokens.push_back(toks[k].text);
            if (const LexiconEntry* e = lexicon.lookup(probe)) {
                hit = e;
                hit_len = len;
            }
        }

        // Skip-bigrams, nearest partner first.
        if (!hit && lexicon.has_skip_terms()) {
            for (std::size_t gap = 1; gap <= skip_window && !hit; ++gap) {
                std::size_t j = i + 1 + gap;
                if (j >= n || consumed[j]) continue;
                Term probe;
                probe.tokens = {toks[i].text, toks[j].text};
                probe.skip = true;
                if (const LexiconEntry* e = lexicon.lookup(probe)) {
                    hit = e;
                    hit_partner = j;
                }
            }
        }

        if (!hit) {
            Term probe;
            probe.tokens = {toks[i].text};
            if (const LexiconEntry* e = lexicon.lookup(probe)) {
                hit = e;
                hit_len = 1;
            }
        }
        if (!hit) continue;

        if (hit_len > 0) {
            for (std::size_t k = i; k < i + hit_len; ++k) consumed[k] = 1;
        } else {
            consumed[i] = 1;
            consumed[hit_partner] = 1;
        }
        matches.push_back({hit->term, i, toks[i].start,
                           entry_contribution(*hit)});
    }
    return matches;
}

ScoreResult score_stream(const TokenStream& stream, const Lexicon& lexicon,
                         std::size_t skip_window) {
    ScoreResult r;
    r.document_id = stream.document_id;
    r.lexicon_name = lexicon.name();
    r.matches = match_terms(stream, lexicon, skip_window);

    for (const auto& m : r.matches) {
        if (m.contribution > 0) ++r.positive_count;
        if (m.contribution < 0) ++r.negative_count;
        r.valence_sum += m.contribution;
    }
    double decision =
        lexicon.kind() == LexiconKind::Categorical
            ? static_cast<double>(r.positive_count) -
                  static_cast<double>(r.negative_count)
            : r.valence_sum;
    r.polarity = decision > 0   ? Polarity::Positive
                 : decision < 0 ? Polarity::Negative
                                : Polarity::Neutral;
    return r;
}

ScoreResult score_document(std::string_view document,
                           const std::string& document_id,
                           const Lexicon& lexicon, std::size_t skip_window) {
    return score_stream(tokenize(document, document_id), lexicon, skip_window);
}

namespace {

void check_distinct_ids(const std::vector<Document>& documents) {
    std::set<std::string> ids;
    for (const auto& [id, text] : documents)
        if (!ids.insert(id).second)
            throw error("duplicate document id '" + id + "'");
}

}  // namespace

std::vector<ScoreResult> score_corpus_serial(
    const std::vector<Document>& documents, const Lexicon& lexicon,
    std::size_t skip_window) {
    check_distinct_ids(documents);
    std::vector<ScoreResult> results;
    results.reserve(documents.size());
    for (const auto& [id, text] : documents)
        results.push_back(score_document(text, id, lexicon, skip_window));
    return results;
}

std::vector<ScoreResult> score_corpus(const std::vector<Document>& documents,
                                      const Lexicon& lexicon,
                                      std::size_t skip_window) {
    check_distinct_ids(documents);
    std::vector<ScoreResult> results(documents.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < documents.size(); ++i) {
        try {
            results[i] = score_document(documents[i].second,
                                        documents[i].first, lexicon,
                                        skip_window);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace sentilex
