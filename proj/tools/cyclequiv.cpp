#include <iostream>

#include "cyclequiv/cli.hpp"

int main(int argc, char** argv) { return cyclequiv::run(argc, argv, std::cout, std::cerr); }
