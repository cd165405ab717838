#include <iostream>

#include "chordal/service.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const chordal::CommandResult result = chordal::run_cli(args);
    std::cout << result.stdout_payload;
    std::cerr << result.stderr_payload;
    return result.exit_code;
}
