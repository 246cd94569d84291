#ifndef SENTILEX_BUILDER_HPP_
#define SENTILEX_BUILDER_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentilex/lexicon.hpp"

namespace sentilex {

// Bilingual term mapping. One source term may fan out to several
// target phrases.
struct TranslationMapping {
    std::string source_language;
    std::string target_language;
    std::map<Term, std::vector<Term>> pairs;
};

// Mapping file format:
//   #map <src-tag> <tgt-tag>
//   source_term<TAB>target_phrase      (repeat source term for fan-out)
TranslationMapping parse_mapping(std::string_view text);

struct BuildReport {
    std::size_t translated_count = 0;
    std::vector<std::string> unmapped_source_terms;          // sorted
    std::vector<std::pair<std::string, std::set<Polarity>>> conflicts_dropped;
    std::vector<std::string> manual_overrides;               // sorted

    std::string to_text() const;
};

// Projects a categorical source lexicon through the mapping. Each
// mapped source entry contributes one auto-translated target entry per
// target phrase, with provenance = the source term. Target phrases
// reached from source terms of conflicting polarity are dropped and
// reported; agreeing fan-ins keep one entry with the codepoint-first
// root as provenance.
std::pair<Lexicon, BuildReport> translate_lexicon(
    const Lexicon& source, const TranslationMapping& mapping,
    const std::string& name);

// Inserts manual-native entries into `automatic`; manual entries win
// term collisions (recorded in manual_overrides). Two manual entries
// for one term with different polarity are a hard error.
std::pair<Lexicon, BuildReport> merge_manual(
    const Lexicon& automatic, const std::vector<LexiconEntry>& manual_entries);

// translate_lexicon then merge_manual; reports merged field-wise.
std::pair<Lexicon, BuildReport> build_target_lexicon(
    const Lexicon& source, const TranslationMapping& mapping,
    const std::vector<LexiconEntry>& manual_entries, const std::string& name);

// Loads manual entries from a canonical lexicon file restricted to
// source = manual-native; checks the language matches `target_language`.
std::vector<LexiconEntry> parse_manual_entries(
    std::string_view text, const std::string& target_language);

}  // namespace sentilex

#endif  // SENTILEX_BUILDER_HPP_
