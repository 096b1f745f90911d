#include <iostream>

#include "qschur_cli/commands.hpp"

int main(int argc, char** argv)
{
    return qschur::cli::run(argc, argv, std::cout, std::cerr);
}
