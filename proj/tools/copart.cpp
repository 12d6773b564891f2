#include <iostream>

#include "copart/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return copart::cli::run(args, std::cout, std::cerr);
}
