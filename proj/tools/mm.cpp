#include <iostream>
#include <string>
#include <vector>

#include "mm/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return mm::run(args, std::cout, std::cerr);
}
