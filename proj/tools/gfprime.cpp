#include "gfprime/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gfprime::cli::run(argc, argv, std::cout, std::cerr); }
