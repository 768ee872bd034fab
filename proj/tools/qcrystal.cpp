#include <iostream>

#include "qcrystal/cli.hpp"

int main(int argc, char** argv) { return qcrystal::cli::run(argc, argv, std::cout, std::cerr); }
