#include <iostream>
#include <string>
#include <vector>

#include "weiltate/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return weiltate::cli::run(args, std::cout, std::cerr);
}
