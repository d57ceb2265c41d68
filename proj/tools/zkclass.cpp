#include <iostream>
#include <string>
#include <vector>

#include "zk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zk::run_cli(args, std::cout, std::cerr);
}
