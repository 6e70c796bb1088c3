#include <iostream>

#include "nse3d/cli.hpp"

int main(int argc, char** argv) { return nse3d::run_cli(argc, argv, std::cout, std::cerr); }
