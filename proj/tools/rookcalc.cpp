#include <iostream>

#include "rookcalc/cli.hpp"

int main(int argc, char** argv) { return rookcalc::cli::run_cli(argc, argv, std::cout, std::cerr); }
