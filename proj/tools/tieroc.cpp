#include <iostream>
#include <string>
#include <vector>

#include "tieroc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return tieroc::cli::run(args, std::cout, std::cerr);
}
