#include <iostream>

#include "gkz/cli/app.hpp"

int main(int argc, char** argv) { return gkz::cli::main(argc, argv, std::cout, std::cerr); }
