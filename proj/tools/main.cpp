#include <iostream>
#include <string>
#include <vector>

#include "ramseylab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ramseylab::cli_run(std::move(args), std::cout, std::cerr);
}
