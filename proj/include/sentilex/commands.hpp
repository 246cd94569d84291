#ifndef SENTILEX_COMMANDS_HPP_
#define SENTILEX_COMMANDS_HPP_

#include <string>

#include "sentilex/config.hpp"
#include "sentilex/lexicon.hpp"

namespace sentilex {

// Loads one configured lexicon from disk (any of the four spec kinds).
Lexicon load_lexicon(const LexiconSpec& spec);

// Subcommand bodies. Each validates the config, runs, writes its output
// files into config.output_dir (created if absent) and returns the
// process exit status: 0 on success, 1 with diagnostics on stderr
// otherwise. Output files are written atomically so failed runs leave
// no partial files behind.
int cmd_build(const RunConfig& config);
int cmd_score(const RunConfig& config);
int cmd_evaluate(const RunConfig& config);

// SENTILEX_LOG={quiet,info,debug}; messages go to stderr, never into
// data files.
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace sentilex

#endif  // SENTILEX_COMMANDS_HPP_
