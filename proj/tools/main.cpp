#include "truemper/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return truemper::run_cli(argc, argv, std::cout, std::cerr); }
