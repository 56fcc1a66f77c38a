#include <iostream>

#include "udh/cli.hpp"

int main(int argc, char** argv) { return udh::run_cli(argc, argv, std::cout, std::cerr); }
