// Shared test utilities: random generators and the independent
// brute-force oracles the unit and acceptance suites check against.
#ifndef SENTILEX_TESTS_HELPERS_HPP_
#define SENTILEX_TESTS_HELPERS_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sentilex/lexicon.hpp"
#include "sentilex/tokenizer.hpp"

namespace sentilex::testing {

inline const std::vector<std::string>& small_alphabet() {
    static const std::vector<std::string> words = {
        "mma", "ọma", "ụtọ", "njọ", "egwu",
        "obi", "taa",      "ihe"};
    return words;
}

inline std::string random_word(std::mt19937& rng) {
    static const std::vector<std::string> letters = {
        "a", "b", "o", "u", "n", "ọ", "ụ", "ị", "ṅ"};
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::string w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w += letters[pick(rng)];
    return w;
}

inline Term random_term(std::mt19937& rng, std::size_t max_arity,
                        bool allow_skip) {
    std::uniform_int_distribution<std::size_t> arity(1, max_arity);
    std::size_t a = arity(rng);
    bool skip = false;
    if (allow_skip && a == 2) skip = std::uniform_int_distribution<int>(0, 1)(rng);
    std::vector<std::string> toks;
    for (std::size_t i = 0; i < a; ++i) toks.push_back(random_word(rng));
    return make_term(toks, skip, max_arity);
}

inline Lexicon random_lexicon(std::mt19937& rng, const std::string& name) {
    std::uniform_int_distribution<int> kind_pick(0, 2);
    LexiconKind kind = static_cast<LexiconKind>(kind_pick(rng));
    Lexicon lex(name, "ig", kind);
    std::uniform_int_distribution<std::size_t> count(0, 12);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> ival(-5, 5);
    std::uniform_real_distribution<double> rval(-3.0, 3.0);
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        LexiconEntry e;
        const bool ngram = kind == LexiconKind::NgramScored;
        e.term = random_term(rng, ngram ? 2 : 5, ngram);
        if (lex.lookup(e.term)) continue;
        if (kind == LexiconKind::Categorical) {
            e.polarity = coin(rng) ? Polarity::Positive : Polarity::Negative;
        } else if (kind == LexiconKind::Valenced) {
            e.valence = static_cast<double>(ival(rng));
        } else {
            e.valence = rval(rng);
        }
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0:
                e.source = EntrySource::Imported;
                break;
            case 1:
                e.source = EntrySource::AutoTranslated;
                e.provenance = random_word(rng);
                break;
            default:
                e.source = EntrySource::ManualNative;
                break;
        }
        lex.add(std::move(e));
    }
    return lex;
}

// ---------------------------------------------------------------------
// Brute-force matching oracle: enumerates every maximal non-overlapping
// match set and picks the best one under the leftmost-longest ordering
// (first-token position ascending; at equal positions longer adjacent
// terms beat skip-bigrams beat unigrams; nearer skip partners first).
// Returns the chosen match keys in order. Independent of match_terms.
// ---------------------------------------------------------------------

struct OracleCandidate {
    std::size_t start;
    int rank;  // smaller is better at equal start
    std::vector<std::size_t> positions;
    Term term;
};

inline std::vector<OracleCandidate> oracle_candidates(
    const std::vector<std::string>& tokens, const Lexicon& lexicon,
    std::size_t skip_window) {
    std::vector<OracleCandidate> cands;
    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t len = 1; len <= 5 && i + len <= n; ++len) {
            Term probe;
            for (std::size_t k = i; k < i + len; ++k)
                probe.tokens.push_back(tokens[k]);
            if (!lexicon.lookup(probe)) continue;
            std::vector<std::size_t> pos;
            for (std::size_t k = i; k < i + len; ++k) pos.push_back(k);
            // rank: long adjacent < skip < unigram
            int rank = len >= 2 ? static_cast<int>(5 - len) : 100;
            cands.push_back({i, rank, std::move(pos), std::move(probe)});
        }
        for (std::size_t gap = 1; gap <= skip_window; ++gap) {
            std::size_t j = i + 1 + gap;
            if (j >= n) break;
            Term probe;
            probe.tokens = {tokens[i], tokens[j]};
            probe.skip = true;
            if (!lexicon.lookup(probe)) continue;
            cands.push_back({i, 10 + static_cast<int>(gap), {i, j}, probe});
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const OracleCandidate& a, const OracleCandidate& b) {
                  if (a.start != b.start) return a.start < b.start;
                  return a.rank < b.rank;
              });
    return cands;
}

// -1 if a is better than b.
inline int compare_sequences(const std::vector<const OracleCandidate*>& a,
                             const std::vector<const OracleCandidate*>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i]->start != b[i]->start)
            return a[i]->start < b[i]->start ? -1 : 1;
        if (a[i]->rank != b[i]->rank) return a[i]->rank < b[i]->rank ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
    return 0;
}

struct OracleState {
    const std::vector<OracleCandidate>* cands;
    std::size_t n_tokens;
    std::vector<const OracleCandidate*> best;
    bool have_best = false;
};

inline bool oracle_compatible(const OracleCandidate& c,
                              const std::vector<char>& used) {
    for (std::size_t p : c.positions)
        if (used[p]) return false;
    return true;
}

inline void oracle_rec(OracleState& st, std::size_t idx,
                       std::vector<const OracleCandidate*>& chosen,
                       std::vector<char>& used) {
    // Prune: already lexicographically worse than the best found.
    if (st.have_best && !chosen.empty()) {
        std::size_t i = chosen.size() - 1;
        if (i < st.best.size()) {
            auto cmp = [&](std::size_t k) {
                if (chosen[k]->start != st.best[k]->start)
                    return chosen[k]->start < st.best[k]->start ? -1 : 1;
                if (chosen[k]->rank != st.best[k]->rank)
                    return chosen[k]->rank < st.best[k]->rank ? -1 : 1;
                return 0;
            };
            int c = 0;
            for (std::size_t k = 0; k <= i && c == 0; ++k) c = cmp(k);
            if (c > 0) return;
        }
    }
    if (idx == st.cands->size()) {
        for (const auto& c : *st.cands)
            if (oracle_compatible(c, used)) return;  // not maximal
        if (!st.have_best ||
            compare_sequences(chosen, st.best) < 0) {
            st.best = chosen;
            st.have_best = true;
        }
        return;
    }
    const OracleCandidate& c = (*st.cands)[idx];
    if (oracle_compatible(c, used)) {
        for (std::size_t p : c.positions) used[p] = 1;
        chosen.push_back(&c);
        oracle_rec(st, idx + 1, chosen, used);
        chosen.pop_back();
        for (std::size_t p : c.positions) used[p] = 0;
    }
    oracle_rec(st, idx + 1, chosen, used);
}

inline std::vector<Term> oracle_match(const std::vector<std::string>& tokens,
                                      const Lexicon& lexicon,
                                      std::size_t skip_window) {
    auto cands = oracle_candidates(tokens, lexicon, skip_window);
    OracleState st;
    st.cands = &cands;
    st.n_tokens = tokens.size();
    std::vector<const OracleCandidate*> chosen;
    std::vector<char> used(tokens.size(), 0);
    oracle_rec(st, 0, chosen, used);
    std::vector<Term> out;
    for (const auto* c : st.best) out.push_back(c->term);
    return out;
}

}  // namespace sentilex::testing

#endif  // SENTILEX_TESTS_HELPERS_HPP_
