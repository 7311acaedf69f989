#include <iostream>

#include "kmb/cli/cli.hpp"

int main(int argc, char** argv) { return kmb::cli::run(argc, argv, std::cout, std::cerr); }
