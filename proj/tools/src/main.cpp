#include <iostream>

#include "rookrep_cli/cli.hpp"

int main(int argc, char** argv) { return rookrep::cli::run(argc, argv, std::cout, std::cerr); }
