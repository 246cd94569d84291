#include "sentilex/formats.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "sentilex/error.hpp"
#include "sentilex/unicode.hpp"

namespace sentilex {

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string text;    // without terminator
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!(end == text.size() && line.empty()))
            lines.push_back({number, std::move(line)});
        if (end == text.size()) break;
        start = end + 1;
        ++number;
    }
    return lines;
}

bool is_blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t') return false;
    return true;
}

// `term<TAB>value` split; throws with the line number if the TAB is
// missing or either side is empty.
std::pair<std::string, std::string> split_tsv2(const Line& ln) {
    std::size_t tab = ln.text.find('\t');
    if (tab == std::string::npos)
        throw parse_error(ln.number, "expected `term<TAB>value`, no TAB found");
    std::string term = ln.text.substr(0, tab);
    std::string value = ln.text.substr(tab + 1);
    if (term.empty()) throw parse_error(ln.number, "empty term field");
    if (value.empty()) throw parse_error(ln.number, "empty value field");
    return {term, value};
}

double parse_real(const std::string& s, std::size_t line) {
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end != begin + s.size() || errno != 0 || !std::isfinite(v))
        throw parse_error(line, "unparseable score '" + s + "'");
    return v;
}

long parse_integer(const std::string& s, std::size_t line) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw parse_error(line, "unparseable integer score '" + s + "'");
    return v;
}

void add_word_list(Lexicon& lex, std::string_view text, Polarity polarity,
                   const std::string& which) {
    uni::decode_utf8(text, which + " word list");  // validate, byte offset
    for (const auto& ln : split_lines(text)) {
        if (is_blank(ln.text) || ln.text[0] == ';') continue;
        LexiconEntry e;
        try {
            e.term = parse_term(ln.text, 5);
        } catch (const error& err) {
            throw parse_error(ln.number, err.what());
        }
        e.polarity = polarity;
        e.source = EntrySource::Imported;
        lex.add(std::move(e));
    }
}

}  // namespace

Lexicon parse_categorical(std::string_view positive_list_text,
                          std::string_view negative_list_text,
                          const std::string& name,
                          const std::string& language) {
    Lexicon lex(name, language, LexiconKind::Categorical);
    add_word_list(lex, positive_list_text, Polarity::Positive, "positive");
    add_word_list(lex, negative_list_text, Polarity::Negative, "negative");
    return lex;
}

Lexicon parse_valenced(std::string_view tsv_text, const std::string& name,
                       const std::string& language) {
    uni::decode_utf8(tsv_text, "valenced lexicon");
    Lexicon lex(name, language, LexiconKind::Valenced);
    for (const auto& ln : split_lines(tsv_text)) {
        if (is_blank(ln.text) || ln.text[0] == ';') continue;
        auto [term_text, value_text] = split_tsv2(ln);
        long score = parse_integer(value_text, ln.number);
        if (score < -5 || score > 5)
            throw parse_error(ln.number, "score " + std::to_string(score) +
                                             " outside [-5, 5]");
        LexiconEntry e;
        try {
            e.term = parse_term(term_text, 5);
        } catch (const error& err) {
            throw parse_error(ln.number, err.what());
        }
        e.valence = static_cast<double>(score);
        e.source = EntrySource::Imported;
        lex.add(std::move(e));
    }
    return lex;
}

Lexicon parse_ngram_scored(std::string_view tsv_text, const std::string& name,
                           const std::string& language) {
    uni::decode_utf8(tsv_text, "ngram lexicon");
    Lexicon lex(name, language, LexiconKind::NgramScored);
    for (const auto& ln : split_lines(tsv_text)) {
        if (is_blank(ln.text) || ln.text[0] == ';') continue;
        auto [term_text, value_text] = split_tsv2(ln);
        LexiconEntry e;
        try {
            e.term = parse_term(term_text, 2);
        } catch (const error& err) {
            throw parse_error(ln.number, err.what());
        }
        e.valence = parse_real(value_text, ln.number);
        e.source = EntrySource::Imported;
        lex.add(std::move(e));
    }
    return lex;
}

std::string format_score(double value) {
    if (value == std::floor(value) && std::fabs(value) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(value);
        return os.str();
    }
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, p);
}

static constexpr const char* kCanonicalHeader =
    "term\tkindvalue\tsource\tprovenance";

std::string serialize_canonical(const Lexicon& lexicon) {
    std::string out;
    out += ";sentilex " + lexicon.name() + " " + lexicon.language() + " " +
           to_string(lexicon.kind()) + "\n";
    out += kCanonicalHeader;
    out += '\n';
    for (const auto& [term, entry] : lexicon.entries()) {
        out += term.key();
        out += '\t';
        out += entry.polarity ? to_string(*entry.polarity)
                              : format_score(*entry.valence);
        out += '\t';
        out += to_string(entry.source);
        out += '\t';
        if (entry.provenance) out += *entry.provenance;
        out += '\n';
    }
    return out;
}

Lexicon parse_canonical(std::string_view text) {
    uni::decode_utf8(text, "canonical lexicon");
    auto lines = split_lines(text);
    if (lines.size() < 2)
        throw parse_error(1, "canonical lexicon needs a metadata line and a "
                             "column header");

    std::istringstream meta(lines[0].text);
    std::string magic, name, language, kind_text;
    meta >> magic >> name >> language >> kind_text;
    if (magic != ";sentilex" || name.empty() || language.empty() ||
        kind_text.empty())
        throw parse_error(1, "bad metadata line, expected `;sentilex <name> "
                             "<language> <kind>`");
    auto kind = lexicon_kind_from(kind_text);
    if (!kind)
        throw parse_error(1, "unknown lexicon kind '" + kind_text + "'");
    if (lines[1].text != kCanonicalHeader)
        throw parse_error(2, "bad column header");

    Lexicon lex(name, language, *kind);
    const std::size_t cap = *kind == LexiconKind::NgramScored ? 2u : 5u;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (is_blank(ln.text)) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = ln.text.find('\t', start);
            fields.push_back(ln.text.substr(
                start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 4)
            throw parse_error(ln.number, "expected 4 TAB-separated fields");

        LexiconEntry e;
        try {
            e.term = parse_term(fields[0], cap);
        } catch (const error& err) {
            throw parse_error(ln.number, err.what());
        }
        if (*kind == LexiconKind::Categorical) {
            if (fields[1] == "positive")
                e.polarity = Polarity::Positive;
            else if (fields[1] == "negative")
                e.polarity = Polarity::Negative;
            else
                throw parse_error(ln.number,
                                  "unknown polarity '" + fields[1] + "'");
        } else {
            e.valence = parse_real(fields[1], ln.number);
        }
        auto source = entry_source_from(fields[2]);
        if (!source)
            throw parse_error(ln.number,
                              "unknown source tag '" + fields[2] + "'");
        e.source = *source;
        if (!fields[3].empty()) e.provenance = fields[3];

        if (lex.lookup(e.term))
            throw parse_error(ln.number,
                              "duplicate term '" + e.term.key() + "'");
        try {
            lex.add(std::move(e));
        } catch (const error& err) {
            throw parse_error(ln.number, err.what());
        }
    }
    return lex;
}

}  // namespace sentilex
