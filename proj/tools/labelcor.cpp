#include <iostream>

#include "labelcor/cli.hpp"

int main(int argc, char** argv) { return labelcor::cli::run_cli(argc, argv, std::cout, std::cerr); }
