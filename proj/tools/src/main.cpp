#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "version.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> sets;
    std::string seed;
    std::string out;
    std::string solver;
    std::string kind;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "key = value config file");
    cmd->add_option("--set", opts.sets, "override a config key (key=value, repeatable)");
    cmd->add_option("--seed", opts.seed, "master seed (alias for ensemble.seed)");
    cmd->add_option("--out", opts.out, "output CSV path ('-' for stdout)");
    cmd->add_option("--solver", opts.solver,
                    "amplitude solver: analytic|scaled|volterra|all");
    cmd->add_option("--kind", opts.kind, "trajectory kind: mcwf|homodyne");
}

nmqt::cli::Config build_config(const CommonOpts& opts) {
    nmqt::cli::Config cfg;
    if (!opts.config_path.empty()) cfg.load_file(opts.config_path);
    int ordinal = 0;
    for (const auto& kv : opts.sets)
        cfg.apply_override(kv, "--set #" + std::to_string(++ordinal));
    if (!opts.seed.empty()) cfg.set("ensemble.seed", opts.seed, "--seed");
    if (!opts.out.empty()) cfg.set("output.path", opts.out, "--out");
    if (!opts.solver.empty()) cfg.set("amplitude.solver", opts.solver, "--solver");
    if (!opts.kind.empty()) cfg.set("run.kind", opts.kind, "--kind");
    return cfg;
}

int write_output(const nmqt::cli::Config& cfg, const nmqt::cli::CommandOutput& output) {
    const std::string path = cfg.text_or("output.path", "-");
    if (path == "-") {
        std::cout << output.csv;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "nmqt: cannot open output file '" << path << "'\n";
        return 1;
    }
    out << output.csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-level emitter under frequent null-result monitoring of a "
                 "finite-bandwidth environment"};
    app.set_version_flag("--version", std::string("nmqt ") + nmqt::cli::kVersion);
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"amplitude", "survival amplitude vs time for the configured solvers"},
        {"rate", "effective decay rate vs the scaling variable x"},
        {"traj", "single stochastic trajectory (jump or diffusive)"},
        {"ensemble", "trajectory ensemble average vs the master equation"},
        {"zeno", "repeated-projection survival fidelity vs the interval tau"},
    };

    std::vector<CommonOpts> opts(commands.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].first, commands[i].second);
        add_common(sub, opts[i]);
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        try {
            const nmqt::cli::Config cfg = build_config(opts[i]);
            const auto output = nmqt::cli::run_command(commands[i].first, cfg);
            for (const auto& note : output.notes) std::cerr << "nmqt: " << note << "\n";
            return write_output(cfg, output);
        } catch (const nmqt::cli::ConfigError& e) {
            std::cerr << "nmqt: config error: " << e.what() << "\n";
            return 1;
        } catch (const std::invalid_argument& e) {
            std::cerr << "nmqt: config error: " << e.what() << "\n";
            return 1;
        } catch (const std::exception& e) {
            std::cerr << "nmqt: numerical failure: " << e.what() << "\n";
            return 2;
        }
    }
    return 1;
}
