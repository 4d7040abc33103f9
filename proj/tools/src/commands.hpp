#ifndef NMQT_CLI_COMMANDS_HPP
#define NMQT_CLI_COMMANDS_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace nmqt::cli {

struct CommandOutput {
    std::string csv;
    std::vector<std::string> notes;  // advisories / pass-fail lines for stderr
};

/// name in {amplitude, rate, traj, ensemble, zeno}.  Throws ConfigError for
/// configuration problems and the nmqt numerical error types otherwise.
CommandOutput run_command(const std::string& name, const Config& cfg);

}  // namespace nmqt::cli

#endif
