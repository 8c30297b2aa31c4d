#include "hopfpar/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hopfpar::run(args, std::cin, std::cout, std::cerr);
}
