#include <iostream>
#include <string>
#include <vector>

#include "genflag/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return genflag::run_command(args, std::cout, std::cerr);
}
