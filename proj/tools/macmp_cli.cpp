#include <iostream>

#include "macmp/cli.hpp"

int main(int argc, char** argv) { return macmp::run_cli(argc, argv, std::cout, std::cerr); }
