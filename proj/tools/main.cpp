#include <iostream>
#include <string>
#include <vector>

#include "spikesweep/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return spikesweep::run_cli(args, std::cout, std::cerr);
}
