#include <iostream>

#include "heckerep/cli/run.hpp"

int main(int argc, char** argv) { return heckerep::cli::run(argc, argv, std::cout, std::cerr); }
