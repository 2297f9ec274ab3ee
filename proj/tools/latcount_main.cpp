#include <iostream>
#include <string>
#include <vector>

#include "latcount/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return latcount::run_cli(args, std::cout, std::cerr);
}
