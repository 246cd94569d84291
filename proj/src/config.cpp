#include "sentilex/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sentilex/corpus.hpp"
#include "sentilex/error.hpp"
#include "sentilex/lexicon.hpp"

namespace sentilex {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text, const fs::path& config_path) {
    RunConfig cfg;
    cfg.base_dir = config_path.parent_path();
    auto resolve = [&](const std::string& p) -> fs::path {
        fs::path path(p);
        return path.is_absolute() ? path : cfg.base_dir / path;
    };

    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    std::string section;
    std::string section_arg;
    LexiconSpec* current_lexicon = nullptr;

    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error(number, "unterminated section header");
            std::istringstream hdr(line.substr(1, line.size() - 2));
            hdr >> section >> section_arg;
            current_lexicon = nullptr;
            if (section == "lexicon") {
                if (section_arg.empty())
                    throw parse_error(number,
                                      "[lexicon] header needs a name");
                cfg.lexicons.push_back(LexiconSpec{});
                current_lexicon = &cfg.lexicons.back();
                current_lexicon->name = section_arg;
            } else if (section != "build" && section != "score" &&
                       section != "corpus" && section != "output" &&
                       section != "options") {
                throw parse_error(number, "unknown section [" + section + "]");
            }
            section_arg.clear();
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(number, "expected `key = value`");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw parse_error(number, "empty key");

        if (section == "lexicon") {
            LexiconSpec& spec = *current_lexicon;
            if (key == "kind")
                spec.kind = value;
            else if (key == "language")
                spec.language = value;
            else if (key == "positive")
                spec.positive = resolve(value);
            else if (key == "negative")
                spec.negative = resolve(value);
            else if (key == "path")
                spec.path = resolve(value);
            else
                throw parse_error(number, "unknown lexicon key '" + key + "'");
        } else if (section == "build") {
            if (key == "source")
                cfg.build_source = value;
            else if (key == "mapping")
                cfg.mapping_path = resolve(value);
            else if (key == "manual")
                cfg.manual_path = resolve(value);
            else if (key == "output_name")
                cfg.build_output_name = value;
            else
                throw parse_error(number, "unknown build key '" + key + "'");
        } else if (section == "score") {
            if (key == "lexicon")
                cfg.score_lexicon = value;
            else
                throw parse_error(number, "unknown score key '" + key + "'");
        } else if (section == "corpus") {
            if (key == "path")
                cfg.corpus_path = resolve(value);
            else
                throw parse_error(number, "unknown corpus key '" + key + "'");
        } else if (section == "output") {
            if (key == "dir")
                cfg.output_dir = resolve(value);
            else if (key == "formats")
                cfg.formats = split_csv(value);
            else
                throw parse_error(number, "unknown output key '" + key + "'");
        } else if (section == "options") {
            if (key == "skip_window") {
                long v = -1;
                auto [p, ec] =
                    std::from_chars(value.data(), value.data() + value.size(),
                                    v);
                if (ec != std::errc{} || p != value.data() + value.size() ||
                    v < 0)
                    throw parse_error(number,
                                      "skip_window must be an integer >= 0");
                cfg.skip_window = static_cast<std::size_t>(v);
            } else {
                throw parse_error(number, "unknown options key '" + key + "'");
            }
        } else {
            throw parse_error(number, "key outside any section");
        }
    }
    return cfg;
}

RunConfig load_config(const fs::path& path) {
    return parse_config(read_file(path), path);
}

std::vector<std::string> validate_config(const RunConfig& cfg,
                                         const std::string& command) {
    std::vector<std::string> problems;
    auto check_path = [&](const fs::path& p, const std::string& what) {
        if (p.empty())
            problems.push_back(what + " is not configured");
        else if (!fs::exists(p))
            problems.push_back(what + " does not exist: " + p.string());
    };

    for (const auto& spec : cfg.lexicons) {
        const std::string where = "lexicon '" + spec.name + "': ";
        if (spec.kind == "categorical") {
            check_path(spec.positive, where + "positive list");
            check_path(spec.negative, where + "negative list");
            if (spec.language.empty())
                problems.push_back(where + "language is not set");
        } else if (spec.kind == "valenced" || spec.kind == "ngram-scored") {
            check_path(spec.path, where + "path");
            if (spec.language.empty())
                problems.push_back(where + "language is not set");
        } else if (spec.kind == "canonical") {
            check_path(spec.path, where + "path");
        } else {
            problems.push_back(where + "unknown kind '" + spec.kind + "'");
        }
    }
    for (std::size_t i = 0; i < cfg.lexicons.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.lexicons.size(); ++j)
            if (cfg.lexicons[i].name == cfg.lexicons[j].name)
                problems.push_back("duplicate lexicon name '" +
                                   cfg.lexicons[i].name + "'");

    if (command == "build") {
        if (cfg.build_source.empty()) {
            problems.push_back("[build] source lexicon is not set");
        } else {
            auto it = std::find_if(cfg.lexicons.begin(), cfg.lexicons.end(),
                                   [&](const LexiconSpec& s) {
                                       return s.name == cfg.build_source;
                                   });
            if (it == cfg.lexicons.end())
                problems.push_back("[build] source lexicon '" +
                                   cfg.build_source + "' is not configured");
            else if (it->kind != "categorical")
                problems.push_back("[build] source lexicon '" +
                                   cfg.build_source + "' must be categorical");
        }
        check_path(cfg.mapping_path, "[build] mapping file");
        if (!cfg.manual_path.empty() && !fs::exists(cfg.manual_path))
            problems.push_back("[build] manual file does not exist: " +
                               cfg.manual_path.string());
        if (cfg.build_output_name.empty())
            problems.push_back("[build] output_name is not set");
    }
    if (command == "score") {
        check_path(cfg.corpus_path, "[corpus] path");
        if (cfg.lexicons.empty())
            problems.push_back("score needs one configured lexicon");
        else if (cfg.score_lexicon.empty() && cfg.lexicons.size() > 1)
            problems.push_back(
                "several lexicons configured; set [score] lexicon = <name>");
        else if (!cfg.score_lexicon.empty() &&
                 std::none_of(cfg.lexicons.begin(), cfg.lexicons.end(),
                              [&](const LexiconSpec& s) {
                                  return s.name == cfg.score_lexicon;
                              }))
            problems.push_back("[score] lexicon '" + cfg.score_lexicon +
                               "' is not configured");
    }
    if (command == "evaluate") {
        check_path(cfg.corpus_path, "[corpus] path");
        if (cfg.lexicons.size() < 2)
            problems.push_back("need at least two lexicons");
        for (const auto& f : cfg.formats)
            if (f != "table" && f != "json" && f != "csv")
                problems.push_back("unknown report format '" + f + "'");
        if (cfg.formats.empty())
            problems.push_back("no report formats selected");
    }
    return problems;
}

}  // namespace sentilex
