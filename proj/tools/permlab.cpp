#include <iostream>

#include "permlab/cli.hpp"

int main(int argc, char** argv) { return permlab::cli::run(argc, argv, std::cout, std::cerr); }
