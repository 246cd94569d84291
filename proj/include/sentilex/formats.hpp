#ifndef SENTILEX_FORMATS_HPP_
#define SENTILEX_FORMATS_HPP_

#include <string>
#include <string_view>

#include "sentilex/lexicon.hpp"

namespace sentilex {

// Liu-style pair of word lists, one term per line. Lines starting with
// ';' and blank lines are ignored. Opposing duplicates across the two
// lists are a hard error.
Lexicon parse_categorical(std::string_view positive_list_text,
                          std::string_view negative_list_text,
                          const std::string& name, const std::string& language);

// aFinn-style TSV: `term<TAB>integer` with the integer in [-5, 5].
Lexicon parse_valenced(std::string_view tsv_text, const std::string& name,
                       const std::string& language);

// NRC-style TSV: `term<TAB>realscore`; unigrams, bigrams (one internal
// space) and skip-bigrams (`good---day`).
Lexicon parse_ngram_scored(std::string_view tsv_text, const std::string& name,
                           const std::string& language);

// Canonical on-disk lexicon format:
//   ;sentilex <name> <language> <kind>
//   term<TAB>kindvalue<TAB>source<TAB>provenance
//   <one entry per line, sorted by term (codepoint order)>
// parse_canonical(serialize_canonical(L)) == L.
std::string serialize_canonical(const Lexicon& lexicon);
Lexicon parse_canonical(std::string_view text);

// Shortest decimal rendering that round-trips through parsing.
std::string format_score(double value);

}  // namespace sentilex

#endif  // SENTILEX_FORMATS_HPP_
