#include <iostream>

#include "mipoly/cli.hpp"

int main(int argc, char** argv) { return mipoly::run_cli(argc, argv, std::cout, std::cerr); }
