#include "sentilex/lexicon.hpp"

#include <cmath>

#include "sentilex/error.hpp"
#include "sentilex/unicode.hpp"

namespace sentilex {

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        case Polarity::Neutral: return "neutral";
    }
    return "?";
}

std::string Term::key() const {
    std::string out;
    const char* sep = skip ? "---" : " ";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += sep;
        out += tokens[i];
    }
    return out;
}

Term make_term(const std::vector<std::string>& raw_tokens, bool skip,
               std::size_t max_arity) {
    Term t;
    t.skip = skip;
    for (const auto& raw : raw_tokens) {
        std::string tok = uni::normalize(raw);
        if (tok.empty()) throw error("term token is empty");
        for (char32_t cp : uni::decode_utf8(tok, "term token"))
            if (uni::is_whitespace(cp))
                throw error("term token contains whitespace: '" + tok + "'");
        if (tok.find("---") != std::string::npos)
            throw error("term token contains the skip marker '---': '" + tok +
                        "'");
        t.tokens.push_back(std::move(tok));
    }
    if (t.tokens.empty()) throw error("term has no tokens");
    if (t.tokens.size() > max_arity)
        throw error("term '" + t.key() + "' exceeds arity cap " +
                    std::to_string(max_arity));
    if (skip && t.tokens.size() != 2)
        throw error("skip-bigram term '" + t.key() +
                    "' must have exactly two tokens");
    return t;
}

Term parse_term(std::string_view text, std::size_t max_arity) {
    const bool skip = text.find("---") != std::string_view::npos;
    std::vector<std::string> toks;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
    };
    if (skip) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t m = text.find("---", pos);
            if (m == std::string_view::npos) m = text.size();
            toks.emplace_back(text.substr(pos, m - pos));
            pos = m == text.size() ? m : m + 3;
        }
    } else {
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
                flush();
            else
                cur.push_back(c);
        }
        flush();
    }
    if (toks.empty()) throw error("empty term");
    return make_term(toks, skip, max_arity);
}

std::string to_string(EntrySource s) {
    switch (s) {
        case EntrySource::Imported: return "imported";
        case EntrySource::AutoTranslated: return "auto-translated";
        case EntrySource::ManualNative: return "manual-native";
    }
    return "?";
}

std::optional<EntrySource> entry_source_from(std::string_view s) {
    if (s == "imported") return EntrySource::Imported;
    if (s == "auto-translated") return EntrySource::AutoTranslated;
    if (s == "manual-native") return EntrySource::ManualNative;
    return std::nullopt;
}

std::string to_string(LexiconKind k) {
    switch (k) {
        case LexiconKind::Categorical: return "categorical";
        case LexiconKind::Valenced: return "valenced";
        case LexiconKind::NgramScored: return "ngram-scored";
    }
    return "?";
}

std::optional<LexiconKind> lexicon_kind_from(std::string_view s) {
    if (s == "categorical") return LexiconKind::Categorical;
    if (s == "valenced") return LexiconKind::Valenced;
    if (s == "ngram-scored") return LexiconKind::NgramScored;
    return std::nullopt;
}

Lexicon::Lexicon(std::string name, std::string language, LexiconKind kind)
    : name_(std::move(name)), language_(std::move(language)), kind_(kind) {
    if (language_.empty()) throw error("lexicon language tag is empty");
    for (char c : language_)
        if (static_cast<unsigned char>(c) >= 0x80 || c == ' ')
            throw error("lexicon language tag must be non-empty ASCII: '" +
                        language_ + "'");
    if (name_.empty()) throw error("lexicon name is empty");
}

const LexiconEntry* Lexicon::lookup(const Term& term) const {
    auto it = entries_.find(term);
    return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::add(LexiconEntry entry) {
    const bool categorical = kind_ == LexiconKind::Categorical;
    if (categorical) {
        if (!entry.polarity || entry.valence)
            throw error("entry '" + entry.term.key() +
                        "' must carry a polarity in a categorical lexicon");
        if (*entry.polarity == Polarity::Neutral)
            throw error("entry '" + entry.term.key() +
                        "' is neutral; categorical lexicons store only "
                        "positive/negative entries");
    } else {
        if (!entry.valence || entry.polarity)
            throw error("entry '" + entry.term.key() +
                        "' must carry a valence in a " + to_string(kind_) +
                        " lexicon");
        if (kind_ == LexiconKind::Valenced &&
            (*entry.valence < -5.0 || *entry.valence > 5.0))
            throw error("valence of '" + entry.term.key() +
                        "' is outside [-5, 5]");
    }
    if (entry.source == EntrySource::AutoTranslated && !entry.provenance)
        throw error("auto-translated entry '" + entry.term.key() +
                    "' lacks provenance");
    const std::size_t cap = kind_ == LexiconKind::NgramScored ? 2u : 5u;
    if (entry.term.arity() > cap)
        throw error("term '" + entry.term.key() + "' exceeds arity cap " +
                    std::to_string(cap) + " for a " + to_string(kind_) +
                    " lexicon");

    auto [it, inserted] = entries_.emplace(entry.term, entry);
    if (!inserted) {
        if (!(it->second == entry))
            throw error("conflicting duplicate entry for term '" +
                        entry.term.key() + "'");
        return;  // identical duplicate, set semantics
    }
    max_arity_ = std::max(max_arity_, entry.term.arity());
    has_skip_ = has_skip_ || entry.term.skip;
}

}  // namespace sentilex
