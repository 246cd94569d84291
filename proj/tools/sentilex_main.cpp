#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sentilex/commands.hpp"
#include "sentilex/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sentilex - sentiment lexicon builder and polarity "
                 "evaluation toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string formats;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run configuration file")
            ->required();
        cmd->add_option("--out", out_dir,
                        "output directory (overrides [output] dir)");
        cmd->add_option("--format", formats,
                        "report formats, comma separated: table,json,csv");
    };

    CLI::App* build = app.add_subcommand(
        "build", "project a source lexicon and merge manual entries");
    CLI::App* score =
        app.add_subcommand("score", "score a corpus against one lexicon");
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "cross-lexicon polarity agreement report");
    add_common(build);
    add_common(score);
    add_common(evaluate);

    CLI11_PARSE(app, argc, argv);

    try {
        sentilex::RunConfig cfg = sentilex::load_config(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (!formats.empty()) {
            cfg.formats.clear();
            std::string item;
            for (char c : formats + ",") {
                if (c == ',') {
                    if (!item.empty()) cfg.formats.push_back(item);
                    item.clear();
                } else {
                    item.push_back(c);
                }
            }
        }

        if (build->parsed()) return sentilex::cmd_build(cfg);
        if (score->parsed()) return sentilex::cmd_score(cfg);
        if (evaluate->parsed()) return sentilex::cmd_evaluate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
