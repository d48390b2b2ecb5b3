#include <iostream>

#include "torsionkit/cli.hpp"

int main(int argc, char** argv) { return torsionkit::run_cli(argc, argv, std::cout, std::cerr); }
