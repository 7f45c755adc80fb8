#include <iostream>

#include "kgck/cli.hpp"

int main(int argc, char** argv) { return kgck::run_cli(argc, argv, std::cout, std::cerr); }
