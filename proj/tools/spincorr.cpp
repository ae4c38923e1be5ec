#include <iostream>

#include "spincorr/cli.hpp"

int main(int argc, char** argv) { return spincorr::cli::run(argc, argv, std::cout, std::cerr); }
