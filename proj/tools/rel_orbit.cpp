#include <iostream>

#include "relorbit/cli/cli.hpp"

int main(int argc, char** argv) { return relorbit::cli::run(argc, argv, std::cout, std::cerr); }
