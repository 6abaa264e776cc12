#include <iostream>

#include "coinduct/cli.hpp"

int main(int argc, char** argv) { return coinduct::cli::run(argc, argv, std::cout, std::cerr); }
