#include <iostream>
#include <string>
#include <vector>

#include "glvar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return glvar::cli::run(args, std::cout, std::cerr);
}
