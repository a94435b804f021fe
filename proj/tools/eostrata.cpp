#include <iostream>

#include "eo/cli.hpp"

int main(int argc, char** argv) { return eo::cli::run(argc, argv, std::cout, std::cerr); }
