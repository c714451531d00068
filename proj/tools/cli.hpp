#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace pretend::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 2;
inline constexpr int kExitInput = 3;

// A command plus flat key=value parameters (flag names without the leading
// dashes). Serializes to the config-file format, one key per line, sorted.
struct RunConfig {
    std::string command;
    std::map<std::string, std::string> params;

    std::string serialize() const;
    // key=value lines; '#' starts a comment; "command=..." sets the command.
    static RunConfig parse(const std::string& text);
};

const std::vector<std::string>& commands();

// Runs one command. The artifact goes to params["out"] (stdout when absent),
// with a manifest next to it; progress and summaries go to `log`.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

// argv front end: positional command, --flags, optional --config file whose
// values are overridden by explicit flags.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace pretend::cli
