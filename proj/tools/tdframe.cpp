#include <iostream>

#include "tdframe/cli.hpp"

int main(int argc, char** argv) { return tdframe::cli::run(argc, argv, std::cout, std::cerr); }
