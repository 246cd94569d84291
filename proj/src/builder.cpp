#include "sentilex/builder.hpp"

#include <algorithm>
#include <sstream>

#include "sentilex/error.hpp"
#include "sentilex/formats.hpp"
#include "sentilex/unicode.hpp"

namespace sentilex {

namespace {

std::vector<std::string> split_lines_simple(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

TranslationMapping parse_mapping(std::string_view text) {
    uni::decode_utf8(text, "mapping file");
    auto lines = split_lines_simple(text);
    if (lines.empty())
        throw parse_error(1, "mapping file is empty, expected `#map <src> "
                             "<tgt>` header");
    std::istringstream header(lines[0]);
    std::string magic, src, tgt;
    header >> magic >> src >> tgt;
    if (magic != "#map" || src.empty() || tgt.empty())
        throw parse_error(1, "bad mapping header, expected `#map <src-tag> "
                             "<tgt-tag>`");

    TranslationMapping mapping;
    mapping.source_language = src;
    mapping.target_language = tgt;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == ';') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw parse_error(i + 1, "expected `source<TAB>target_phrase`");
        Term source_term, target_phrase;
        try {
            source_term = parse_term(line.substr(0, tab), 5);
            target_phrase = parse_term(line.substr(tab + 1), 5);
        } catch (const error& err) {
            throw parse_error(i + 1, err.what());
        }
        auto& phrases = mapping.pairs[source_term];
        if (std::find(phrases.begin(), phrases.end(), target_phrase) ==
            phrases.end())
            phrases.push_back(target_phrase);
    }
    return mapping;
}

std::string BuildReport::to_text() const {
    std::ostringstream os;
    os << "translated entries: " << translated_count << "\n";
    os << "unmapped source terms (" << unmapped_source_terms.size() << "):\n";
    for (const auto& t : unmapped_source_terms) os << "  " << t << "\n";
    os << "conflicts dropped (" << conflicts_dropped.size() << "):\n";
    for (const auto& [term, polarities] : conflicts_dropped) {
        os << "  " << term << " {";
        bool first = true;
        for (Polarity p : polarities) {
            if (!first) os << ", ";
            os << to_string(p);
            first = false;
        }
        os << "}\n";
    }
    os << "manual overrides (" << manual_overrides.size() << "):\n";
    for (const auto& t : manual_overrides) os << "  " << t << "\n";
    return os.str();
}

std::pair<Lexicon, BuildReport> translate_lexicon(
    const Lexicon& source, const TranslationMapping& mapping,
    const std::string& name) {
    if (source.kind() != LexiconKind::Categorical)
        throw error("translate_lexicon: source lexicon '" + source.name() +
                    "' is not categorical");
    if (source.language() != mapping.source_language)
        throw error("translate_lexicon: source language '" +
                    source.language() + "' does not match mapping source '" +
                    mapping.source_language + "'");

    // Collect the full fan-out first, then resolve per target phrase.
    struct Candidate {
        std::set<Polarity> polarities;
        std::string first_root;  // codepoint-ordered
    };
    std::map<Term, Candidate> candidates;
    BuildReport report;

    for (const auto& [term, entry] : source.entries()) {
        auto it = mapping.pairs.find(term);
        if (it == mapping.pairs.end()) {
            report.unmapped_source_terms.push_back(term.key());
            continue;
        }
        for (const Term& phrase : it->second) {
            auto& cand = candidates[phrase];
            cand.polarities.insert(*entry.polarity);
            if (cand.first_root.empty() || term.key() < cand.first_root)
                cand.first_root = term.key();
        }
    }

    Lexicon target(name, mapping.target_language, LexiconKind::Categorical);
    for (const auto& [phrase, cand] : candidates) {
        if (cand.polarities.size() > 1) {
            report.conflicts_dropped.emplace_back(phrase.key(),
                                                  cand.polarities);
            continue;
        }
        LexiconEntry e;
        e.term = phrase;
        e.polarity = *cand.polarities.begin();
        e.source = EntrySource::AutoTranslated;
        e.provenance = cand.first_root;
        target.add(std::move(e));
    }
    report.translated_count = target.size();
    // Map iteration is already term-ordered; report lists come out sorted.
    return {std::move(target), std::move(report)};
}

std::pair<Lexicon, BuildReport> merge_manual(
    const Lexicon& automatic, const std::vector<LexiconEntry>& manual_entries) {
    if (automatic.kind() != LexiconKind::Categorical)
        throw error("merge_manual: lexicon '" + automatic.name() +
                    "' is not categorical");

    std::map<Term, LexiconEntry> manual;
    for (const auto& e : manual_entries) {
        if (e.source != EntrySource::ManualNative)
            throw error("manual entry '" + e.term.key() +
                        "' does not have source manual-native");
        if (!e.polarity)
            throw error("manual entry '" + e.term.key() + "' lacks polarity");
        auto [it, inserted] = manual.emplace(e.term, e);
        if (!inserted && *it->second.polarity != *e.polarity)
            throw error("contradictory manual entries for term '" +
                        e.term.key() + "'");
    }

    Lexicon merged(automatic.name(), automatic.language(),
                   LexiconKind::Categorical);
    BuildReport report;
    for (const auto& [term, entry] : automatic.entries()) {
        auto it = manual.find(term);
        if (it != manual.end()) {
            report.manual_overrides.push_back(term.key());
            continue;  // manual entry inserted below
        }
        merged.add(entry);
    }
    for (const auto& [term, entry] : manual) merged.add(entry);
    std::sort(report.manual_overrides.begin(), report.manual_overrides.end());
    return {std::move(merged), std::move(report)};
}

std::pair<Lexicon, BuildReport> build_target_lexicon(
    const Lexicon& source, const TranslationMapping& mapping,
    const std::vector<LexiconEntry>& manual_entries, const std::string& name) {
    auto [automatic, report] = translate_lexicon(source, mapping, name);
    auto [merged, merge_report] = merge_manual(automatic, manual_entries);
    report.manual_overrides = std::move(merge_report.manual_overrides);
    report.translated_count = automatic.size();
    return {std::move(merged), std::move(report)};
}

std::vector<LexiconEntry> parse_manual_entries(
    std::string_view text, const std::string& target_language) {
    Lexicon lex = parse_canonical(text);
    if (lex.language() != target_language)
        throw error("manual entries language '" + lex.language() +
                    "' does not match target language '" + target_language +
                    "'");
    std::vector<LexiconEntry> out;
    for (const auto& [term, entry] : lex.entries()) {
        if (entry.source != EntrySource::ManualNative)
            throw error("manual entries file contains non-manual entry '" +
                        term.key() + "'");
        out.push_back(entry);
    }
    return out;
}

}  // namespace sentilex
