#include "revform/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return revform::cli::run_cli(argc, argv, std::cout, std::cerr); }
