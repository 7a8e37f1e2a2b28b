// antimagic/cli.hpp - the command-line front end as a callable library

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antimagic::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_verify_failed = 2,
    exit_mismatch = 3,
    exit_refused = 4,
};

struct CommandOutcome {
    int exit_code = exit_ok;
    std::string payload;  // text, or JSON when --json is given
};

// args excludes the program name. `verify -` reads from in.
CommandOutcome run(const std::vector<std::string>& args, std::istream& in);
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace antimagic::cli
