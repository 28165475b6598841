#include <iostream>

#include "sysgraph/cli.hpp"

int main(int argc, char** argv) { return sysgraph::cli::run(argc, argv, std::cout, std::cerr); }
