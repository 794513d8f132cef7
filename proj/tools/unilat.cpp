#include <iostream>

#include "unilat/cli.hpp"

int main(int argc, char** argv) { return unilat::cli_main(argc, argv, std::cout, std::cerr); }
