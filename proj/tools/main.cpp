#include <iostream>

#include "ohasse/cli/cli.hpp"

int main(int argc, char** argv) { return ohasse::cli::run(argc, argv, std::cout, std::cerr); }
