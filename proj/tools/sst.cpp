#include <iostream>

#include "sst/cli/commands.hpp"

int main(int argc, char** argv) { return sst::run_cli(argc, argv, std::cout, std::cerr); }
