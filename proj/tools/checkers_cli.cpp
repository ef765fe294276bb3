#include <iostream>

#include "checkers/cli.hpp"

int main(int argc, char** argv) { return checkers::cli::run_cli(argc, argv, std::cout, std::cerr); }
