#include <iostream>

#include "betapack/cli.hpp"

int main(int argc, char** argv) { return betapack::run_cli(argc, argv, std::cout, std::cerr); }
