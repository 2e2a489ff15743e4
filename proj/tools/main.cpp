#include <iostream>
#include <string>
#include <vector>

#include "gf4sss/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gf4sss::cli::run(args, std::cout, std::cerr);
}
