#include <iostream>
#include <string>
#include <vector>

#include "partid/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return partid::run_cli(args, std::cout, std::cerr);
}
