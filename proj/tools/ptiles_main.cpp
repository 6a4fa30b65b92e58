#include <iostream>
#include <string>
#include <vector>

#include "ptiles/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ptiles::run_cli(args, std::cout, std::cerr);
}
