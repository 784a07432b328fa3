#include <iostream>

#include "qfrieze_cli.hpp"

int main(int argc, char** argv) { return qfrieze::cli::run(argc, argv, std::cout, std::cerr); }
