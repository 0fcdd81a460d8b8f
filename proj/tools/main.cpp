#include "pendmel/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return pendmel::run_cli(argc, argv, std::cout, std::cerr);
}
