#include <iostream>

#include "qstrat/cli.hpp"

int main(int argc, char** argv) { return qstrat::run_cli(argc, argv, std::cout, std::cerr); }
