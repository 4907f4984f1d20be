#include <iostream>

#include "fiberlab/cli/cli.hpp"

int main(int argc, char** argv) { return fiberlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
