#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return djk::cli::run(argc, argv, std::cout, std::cerr); }
