#include <iostream>

#include "xdeg/cli.hpp"

int main(int argc, char** argv) { return xdeg::run_cli(argc, argv, std::cout, std::cerr); }
