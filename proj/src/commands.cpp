#include "sentilex/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "sentilex/agreement.hpp"
#include "sentilex/builder.hpp"
#include "sentilex/corpus.hpp"
#include "sentilex/error.hpp"
#include "sentilex/formats.hpp"
#include "sentilex/scorer.hpp"

namespace sentilex {

namespace fs = std::filesystem;

namespace {

int log_level() {
    const char* env = std::getenv("SENTILEX_LOG");
    if (!env) return 1;  // info
    std::string v(env);
    if (v == "quiet") return 0;
    if (v == "debug") return 2;
    return 1;
}

// Write to a temp name, then rename into place.
void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    write_file(tmp, content);
    fs::rename(tmp, path);
}

int report_config_problems(const RunConfig& cfg, const std::string& command) {
    auto problems = validate_config(cfg, command);
    if (problems.empty()) return 0;
    for (const auto& p : problems) std::cerr << "error: " << p << "\n";
    return 1;
}

const LexiconSpec& find_spec(const RunConfig& cfg, const std::string& name) {
    auto it = std::find_if(
        cfg.lexicons.begin(), cfg.lexicons.end(),
        [&](const LexiconSpec& s) { return s.name == name; });
    if (it == cfg.lexicons.end())
        throw error("lexicon '" + name + "' is not configured");
    return *it;
}

}  // namespace

void log_info(const std::string& message) {
    if (log_level() >= 1) std::cerr << "sentilex: " << message << "\n";
}

void log_debug(const std::string& message) {
    if (log_level() >= 2) std::cerr << "sentilex[debug]: " << message << "\n";
}

Lexicon load_lexicon(const LexiconSpec& spec) {
    log_debug("loading lexicon '" + spec.name + "' (" + spec.kind + ")");
    if (spec.kind == "categorical")
        return parse_categorical(read_file(spec.positive),
                                 read_file(spec.negative), spec.name,
                                 spec.language);
    if (spec.kind == "valenced")
        return parse_valenced(read_file(spec.path), spec.name, spec.language);
    if (spec.kind == "ngram-scored")
        return parse_ngram_scored(read_file(spec.path), spec.name,
                                  spec.language);
    if (spec.kind == "canonical") {
        Lexicon lex = parse_canonical(read_file(spec.path));
        if (lex.name() != spec.name)
            throw error("canonical file names lexicon '" + lex.name() +
                        "' but config section is '" + spec.name + "'");
        return lex;
    }
    throw error("unknown lexicon kind '" + spec.kind + "'");
}

int cmd_build(const RunConfig& cfg) {
    try {
        if (int rc = report_config_problems(cfg, "build")) return rc;

        Lexicon source = load_lexicon(find_spec(cfg, cfg.build_source));
        TranslationMapping mapping =
            parse_mapping(read_file(cfg.mapping_path));
        std::vector<LexiconEntry> manual;
        if (!cfg.manual_path.empty())
            manual = parse_manual_entries(read_file(cfg.manual_path),
                                          mapping.target_language);

        auto [lexicon, report] = build_target_lexicon(
            source, mapping, manual, cfg.build_output_name);

        fs::create_directories(cfg.output_dir);
        write_atomic(cfg.output_dir / (cfg.build_output_name + ".lex.tsv"),
                     serialize_canonical(lexicon));
        write_atomic(cfg.output_dir / (cfg.build_output_name + ".report.txt"),
                     report.to_text());
        log_info("built '" + cfg.build_output_name + "': " +
                 std::to_string(lexicon.size()) + " entries, " +
                 std::to_string(report.translated_count) + " translated");
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_score(const RunConfig& cfg) {
    try {
        if (int rc = report_config_problems(cfg, "score")) return rc;

        const std::string name = cfg.score_lexicon.empty()
                                     ? cfg.lexicons.front().name
                                     : cfg.score_lexicon;
        Lexicon lexicon = load_lexicon(find_spec(cfg, name));
        auto corpus = load_corpus(cfg.corpus_path);
        auto results = score_corpus(corpus, lexicon, cfg.skip_window);

        std::ostringstream os;
        os << "id\tpositive\tnegative\tvalence_sum\tpolarity\n";
        for (const auto& r : results)
            os << r.document_id << '\t' << r.positive_count << '\t'
               << r.negative_count << '\t' << format_score(r.valence_sum)
               << '\t' << to_string(r.polarity) << '\n';

        fs::create_directories(cfg.output_dir);
        write_atomic(cfg.output_dir / ("scores_" + name + ".tsv"), os.str());
        log_info("scored " + std::to_string(results.size()) +
                 " documents against '" + name + "'");
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_evaluate(const RunConfig& cfg) {
    try {
        if (int rc = report_config_problems(cfg, "evaluate")) return rc;

        std::vector<Lexicon> lexicons;
        for (const auto& spec : cfg.lexicons)
            lexicons.push_back(load_lexicon(spec));
        auto corpus = load_corpus(cfg.corpus_path);
        AgreementReport report =
            build_report(corpus, lexicons, cfg.skip_window);

        fs::create_directories(cfg.output_dir);
        for (const auto& fmt : cfg.formats) {
            if (fmt == "table")
                write_atomic(cfg.output_dir / "agreement.txt",
                             render_table(report));
            else if (fmt == "json")
                write_atomic(cfg.output_dir / "agreement.json",
                             render_json(report));
            else if (fmt == "csv")
                write_atomic(cfg.output_dir / "agreement.csv",
                             render_csv(report));
        }
        log_info("average polarity agreement: " + report.average_display() +
                 "%");
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sentilex
