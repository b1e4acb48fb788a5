#include <iostream>

#include "weldkit/cli.hpp"

int main(int argc, char** argv) { return weldkit::run(argc, argv, std::cout, std::cerr); }
