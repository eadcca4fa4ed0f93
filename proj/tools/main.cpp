#include <iostream>

#include "commgraph/cli.hpp"

int main(int argc, char** argv)
{
    return commgraph::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
