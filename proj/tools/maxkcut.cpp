#include <iostream>
#include <string>
#include <vector>

#include "maxkcut/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return mkc::cli::run(args, std::cout, std::cerr);
}
