#include <iostream>

#include "pwmra_cli/cli.hpp"

int main(int argc, char** argv) { return pwmra::cli::run(argc, argv, std::cout, std::cerr); }
