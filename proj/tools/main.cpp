#include <iostream>

#include "minaff/cli.hpp"

int main(int argc, char** argv) { return minaff::cli::run(argc, argv, std::cout, std::cerr); }
