#include <iostream>

#include "charlier/cli.hpp"

int main(int argc, char** argv) { return charlier::cli::run(argc, argv, std::cout, std::cerr); }
