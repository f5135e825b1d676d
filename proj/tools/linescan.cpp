#include "linescan/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return linescan::cli::run(argc, argv, std::cout, std::cerr);
}
