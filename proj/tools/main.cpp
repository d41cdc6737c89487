#include "pi2/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pi2::run_cli(argc, argv, std::cout, std::cerr); }
