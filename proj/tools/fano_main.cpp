#include <iostream>
#include <vector>

#include "fano/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fano::cli_run(args, std::cout, std::cerr);
}
