#include <iostream>

#include "cartbicat/cli.hpp"

int main(int argc, char** argv) { return cartbicat::run_cli(argc, argv, std::cout, std::cerr); }
