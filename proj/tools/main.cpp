#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    andrasfai::cli::Hooks hooks;
    hooks.interactive = ::isatty(STDOUT_FILENO) != 0;
    return andrasfai::cli::run(args, std::cout, std::cerr, hooks);
}
