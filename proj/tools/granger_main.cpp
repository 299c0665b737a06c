#include "granger/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return granger::run_cli(argc, argv, std::cout, std::cerr); }
