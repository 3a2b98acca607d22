#include "snclab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return snclab::run(argc, argv, std::cout, std::cerr);
}
