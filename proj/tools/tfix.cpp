#include <iostream>
#include <string>
#include <vector>

#include "tfix/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return tfix::cli::run(args, std::cin, std::cout, std::cerr);
}
