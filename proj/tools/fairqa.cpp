#include <iostream>
#include <string>
#include <vector>

#include "fairqa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fairqa::cli::run(args, std::cout, std::cerr);
}
