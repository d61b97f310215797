#include <iostream>

#include "githru/cli/cli.hpp"

int main(int argc, char** argv) { return githru::cli::run(argc, argv, std::cout, std::cerr); }
