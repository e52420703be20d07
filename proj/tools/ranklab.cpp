#include <iostream>

#include <ranklab/cli.hpp>

int main(int argc, char** argv)
{
    return ranklab::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
