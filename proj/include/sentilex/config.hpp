#ifndef SENTILEX_CONFIG_HPP_
#define SENTILEX_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sentilex {

struct LexiconSpec {
    std::string name;
    std::string kind;  // categorical | valenced | ngram-scored | canonical
    std::string language;
    std::filesystem::path positive;  // categorical only
    std::filesystem::path negative;  // categorical only
    std::filesystem::path path;      // other kinds
};

// Parsed from a flat `key = value` file with `[section]` headers:
//   [lexicon <name>]   kind/language/positive/negative/path
//   [build]            source/mapping/manual/output_name/target omitted
//   [score]            lexicon = <name>
//   [corpus]           path
//   [output]           dir, formats = table,json,csv
//   [options]          skip_window
struct RunConfig {
    std::filesystem::path base_dir;  // config file directory; relative
                                     // paths resolve against it
    std::vector<LexiconSpec> lexicons;

    std::string build_source;
    std::filesystem::path mapping_path;
    std::filesystem::path manual_path;  // optional
    std::string build_output_name;

    std::string score_lexicon;  // optional; required if > 1 lexicon

    std::filesystem::path corpus_path;
    std::filesystem::path output_dir = "out";
    std::vector<std::string> formats = {"table"};
    std::size_t skip_window = 2;
};

// Parses the config text. Syntax errors (bad section header, missing
// '=', unknown key) throw immediately.
RunConfig parse_config(const std::string& text,
                       const std::filesystem::path& config_path);

RunConfig load_config(const std::filesystem::path& path);

// Semantic validation for one subcommand; returns ALL problems found,
// empty means valid.
std::vector<std::string> validate_config(const RunConfig& config,
                                         const std::string& command);

}  // namespace sentilex

#endif  // SENTILEX_CONFIG_HPP_
