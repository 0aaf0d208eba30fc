#include <iostream>
#include <string>
#include <vector>

#include "morava/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return morava::cli::run(args, std::cout, std::cerr);
}
