#include <iostream>

#include "deza/cli.hpp"

int main(int argc, char** argv) { return deza::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
