#ifndef SENTILEX_LEXICON_HPP_
#define SENTILEX_LEXICON_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentilex {

enum class Polarity { Positive, Negative, Neutral };

std::string to_string(Polarity p);

// A lexicon term: 1..5 normalized word tokens. `skip` marks a
// skip-bigram (exactly two tokens with intervening tokens allowed when
// matching).
struct Term {
    std::vector<std::string> tokens;
    bool skip = false;

    std::size_t arity() const { return tokens.size(); }

    // Canonical rendering: tokens joined by ' ', or by "---" for
    // skip-bigrams. Unique per term; also the sort key.
    std::string key() const;

    bool operator==(const Term& other) const {
        return skip == other.skip && tokens == other.tokens;
    }
    bool operator<(const Term& other) const { return key() < other.key(); }
};

// Validating constructors. Tokens are normalized here; empty tokens,
// embedded whitespace, the "---" marker inside a token, and arity
// outside [1, max_arity] are rejected.
Term make_term(const std::vector<std::string>& raw_tokens, bool skip = false,
               std::size_t max_arity = 5);
// Splits `text` on whitespace ("---" anywhere makes it a skip-bigram).
Term parse_term(std::string_view text, std::size_t max_arity = 5);

enum class EntrySource { Imported, AutoTranslated, ManualNative };

std::string to_string(EntrySource s);
std::optional<EntrySource> entry_source_from(std::string_view s);

enum class LexiconKind { Categorical, Valenced, NgramScored };

std::string to_string(LexiconKind k);
std::optional<LexiconKind> lexicon_kind_from(std::string_view s);

struct LexiconEntry {
    Term term;
    // Exactly one of these is populated, matching the owning lexicon's
    // kind (polarity for categorical, valence otherwise).
    std::optional<Polarity> polarity;
    std::optional<double> valence;
    EntrySource source = EntrySource::Imported;
    std::optional<std::string> provenance;  // source-language root word

    bool operator==(const LexiconEntry& other) const = default;
};

// Immutable after construction; safe to share across threads read-only.
class Lexicon {
public:
    Lexicon(std::string name, std::string language, LexiconKind kind);

    const std::string& name() const { return name_; }
    const std::string& language() const { return language_; }
    LexiconKind kind() const { return kind_; }

    const std::map<Term, LexiconEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    // Longest term arity present; the matcher never probes beyond it.
    std::size_t max_arity() const { return max_arity_; }
    bool has_skip_terms() const { return has_skip_; }

    const LexiconEntry* lookup(const Term& term) const;

    // Inserts one entry. Enforces kind agreement, the auto-translated ->
    // provenance rule, and the [-5, 5] range for valenced lexicons.
    // A second entry for the same term must be identical (silent dedup);
    // otherwise this throws naming the term.
    void add(LexiconEntry entry);

    bool operator==(const Lexicon& other) const = default;

private:
    std::string name_;
    std::string language_;
    LexiconKind kind_;
    std::map<Term, LexiconEntry> entries_;
    std::size_t max_arity_ = 0;
    bool has_skip_ = false;
};

}  // namespace sentilex

#endif  // SENTILEX_LEXICON_HPP_
