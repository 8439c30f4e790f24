#include <iostream>

#include "maksarum/cli.hpp"

int main(int argc, char** argv) { return maksarum::cli::run(argc, argv, std::cout, std::cerr); }
