#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return pmatch::cli::run(argc, argv, std::cout, std::cerr); }
