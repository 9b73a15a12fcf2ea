#include <iostream>
#include <string>
#include <vector>

#include "cardinal/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return cardinal::run_cli(args, std::cout, std::cerr);
}
