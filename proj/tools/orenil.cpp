#include <iostream>

#include "orenil/cli.hpp"

int main(int argc, char **argv)
{
    return orenil::cli::run(argc, argv, std::cout, std::cerr);
}
