#include <iostream>

#include "monofock_cli/commands.hpp"

int main(int argc, char** argv)
{
    return monofock::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
