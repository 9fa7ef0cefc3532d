#include <iostream>

#include "knitgraph/cli.hpp"

int main(int argc, char** argv) { return knitgraph::run_cli(argc, argv, std::cout, std::cerr); }
