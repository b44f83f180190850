#include "cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto parsed = fibword::cli::parse_args(args, std::cout, std::cerr);
    if (!parsed.config) return parsed.exit_code;
    return fibword::cli::run(*parsed.config, std::cout, std::cerr);
}
