#include <iostream>

#include "qrg/cli.hpp"

int main(int argc, char** argv) { return qrg::run_cli(argc, argv, std::cout, std::cerr); }
