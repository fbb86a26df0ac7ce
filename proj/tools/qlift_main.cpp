#include <iostream>

#include "qlift/cli.hpp"

int main(int argc, char** argv) { return qlift::run_cli(argc, argv, std::cout, std::cerr); }
