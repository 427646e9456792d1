#include "pascal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pascal::run_cli(argc, argv, std::cout, std::cerr); }
