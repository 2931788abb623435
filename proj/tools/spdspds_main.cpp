#include <iostream>

#include "spdspds/cli.hpp"

int main(int argc, char** argv) { return spdspds::run_cli(argc, argv, std::cout, std::cerr); }
