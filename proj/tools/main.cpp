#include <iostream>

#include "metacyclic/cli/run.hpp"

int main(int argc, char** argv) { return metacyclic::cli::main_entry(argc, argv, std::cout, std::cerr); }
