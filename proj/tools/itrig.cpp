#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) { return itrig::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
