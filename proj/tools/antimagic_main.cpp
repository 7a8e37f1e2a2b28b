#include <iostream>

#include "antimagic/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = antimagic::cli::run(args);
    auto& out = outcome.exit_code == antimagic::cli::exit_ok || outcome.exit_code == antimagic::cli::exit_mismatch ||
                        outcome.exit_code == antimagic::cli::exit_verify_failed
                    ? std::cout
                    : std::cerr;
    out << outcome.payload;
    return outcome.exit_code;
}
