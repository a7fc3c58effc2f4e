#include <iostream>
#include <string>
#include <vector>

#include "antalign/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return antalign::cli::run(args, std::cout, std::cerr);
}
