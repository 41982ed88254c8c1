#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tlc/commands.hpp"
#include "tlc/figures.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tlc - pulse design, verification and reachability maps for a driven "
                 "open two-level system"};
    app.set_version_flag("--version", tlc::kVersion);

    std::string config_path, out_dir, figure;
    int workers = 0;
    bool dump_config = false;
    app.add_option("-c,--config", config_path, "experiment config file (JSON)");
    app.add_option("-o,--out", out_dir, "output directory (overrides outputs.directory)");
    app.add_option("-w,--workers", workers, "worker threads for map computations");
    app.add_option("-f,--figure", figure,
                   "bundled figure id (1, 2, 3, 3a..3i, 4, 4a..4i, 5, 6, 7, 7a, 7b, 8)");
    app.add_flag("--dump-config", dump_config,
                 "print the bundled config(s) selected by --figure and exit");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"synth", "synthesize the control pulse and export the waveform"},
        {"track", "synthesize, propagate in the lab frame and compare with the prescription"},
        {"propagate", "synthesize and propagate, trajectory export only"},
        {"reach", "compute the transition accessibility map"},
        {"steady", "tabulate steady-state coherence over the population"},
        {"coherence", "export the coherence modulus implied by the prescription"},
    };
    for (const auto& [name, desc] : commands) app.add_subcommand(name, desc)->fallthrough();
    app.require_subcommand(0, 1);

    CLI11_PARSE(app, argc, argv);

    std::string command;
    for (const auto& [name, desc] : commands) {
        if (app.got_subcommand(name)) command = name;
    }

    if (dump_config) {
        if (figure.empty()) {
            std::cerr << "error: --dump-config needs --figure ID\n";
            return tlc::kExitConfig;
        }
        try {
            for (const auto& fc : tlc::figure_bundle(figure)) {
                std::cout << fc.config.dump(2) << '\n';
            }
        } catch (const tlc::ConfigError& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return tlc::kExitConfig;
        }
        return tlc::kExitOk;
    }

    if (config_path.empty() && figure.empty()) {
        std::cerr << "error: provide --config FILE or --figure ID\n";
        std::cerr << app.help();
        return tlc::kExitConfig;
    }
    if (!config_path.empty() && !figure.empty()) {
        std::cerr << "error: --config and --figure are mutually exclusive\n";
        return tlc::kExitConfig;
    }

    // Assemble the batch of (command, config) runs.
    std::vector<std::pair<std::string, tlc::ExperimentConfig>> runs;
    try {
        if (!figure.empty()) {
            for (auto& fc : tlc::figure_bundle(figure)) {
                runs.emplace_back(command.empty() ? fc.command : command,
                                  tlc::parse_config(fc.config));
            }
        } else {
            if (command.empty()) {
                std::cerr << "error: a subcommand is required with --config\n";
                return tlc::kExitConfig;
            }
            runs.emplace_back(command, tlc::load_config_file(config_path));
        }
    } catch (const tlc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return tlc::kExitConfig;
    }

    int worst = tlc::kExitOk;
    for (auto& [cmd, cfg] : runs) {
        if (!out_dir.empty()) cfg.outputs.directory = out_dir;
        if (workers > 0) cfg.numerics.workers = workers;
        const int rc = tlc::run_guarded(cmd, cfg);
        worst = std::max(worst, rc);
    }
    return worst;
}
